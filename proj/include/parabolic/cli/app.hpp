#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace parabolic::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 2,
    kExitIo = 3,
};

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Sampling seed: PARABOLIC_SEED when set, else kDefaultSeed. Throws
/// InputError when the variable is not a nonnegative integer.
std::uint64_t sampling_seed();

/// Runs the command line args (args[0] is the program name) writing reports to
/// out and diagnostics to err; returns the process exit code.
///
/// Subcommands:
///   analyze GERM [--json|--table]
///   orbit   GERM --start zr,zi,wr,wi [orbit flags]
///   raster  GERM --out FILE.ppm|FILE.csv [slice flags] [--threads N] [orbit flags]
///   check   --region R|S --m M [--k K] --zeta re,im
///   check   --lemma1 c,d,a,b   (or cr,ci,dr,di,a,b)
///   fatou   --point xr,xi,yr,yi [--samples N]
/// GERM is a path to a germ file, or - for standard input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parabolic::cli
