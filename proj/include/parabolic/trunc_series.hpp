#pragma once

#include <vector>

#include "parabolic/types.hpp"
#include "parabolic/unipoly.hpp"

namespace parabolic {

/// Power series truncated after u^order; always holds order + 1 coefficients.
class TruncSeries {
public:
    explicit TruncSeries(int order);
    TruncSeries(const UniPoly& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Complex operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    Complex& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Multiplicative inverse; throws IllConditioned when the constant term is
    /// at or below zero_threshold(scale).
    TruncSeries inverse(double scale) const;

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

private:
    std::vector<Complex> coeffs_;
};

}  // namespace parabolic
