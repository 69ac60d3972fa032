#pragma once

#include <complex>
#include <vector>

#include "logh/errors.hpp"

namespace logh {

using Complex = std::complex<double>;

/// Absolute threshold below which a constant term counts as vanishing.
inline constexpr double kEpsZero = 1e-12;

/// Default truncation order used by the CLI and the test corpus.
inline constexpr int kDefaultOrder = 32;

/// Immutable truncated complex Taylor series at a fixed expansion center.
///
/// coeff(n) multiplies (z - center)^n. Binary operations require both
/// operands to share a center and truncate to the smaller order. All
/// operations are pure; instances can be shared freely across threads.
class TaylorSeries {
  public:
    /// Takes ownership of the coefficient vector; order is coeffs.size()-1.
    /// Throws Errc::non_finite if any coefficient has a NaN/Inf component.
    TaylorSeries(Complex center, std::vector<Complex> coeffs);

    static TaylorSeries constant(Complex value, Complex center, int order);

    /// The identity map z, expanded at `center`: center + (z - center).
    static TaylorSeries variable(Complex center, int order);

    Complex center() const noexcept { return center_; }
    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    Complex coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

    /// Horner evaluation at z.
    Complex eval(Complex z) const noexcept;

    /// Termwise derivative; an order-N series yields order N-1 (order-0
    /// input yields the zero constant).
    TaylorSeries derivative() const;

    /// Termwise antiderivative with the given constant term; order N+1.
    TaylorSeries antiderivative(Complex constant) const;

    /// Taylor shift to a new center. Throws Errc::outside_radius unless
    /// |new_center - center| is strictly inside the trust radius.
    TaylorSeries recenter(Complex new_center) const;

    /// Heuristic reliability radius from the decay of the trailing
    /// coefficients; +inf when the tail vanishes (polynomial-like data).
    /// Evaluation outside the hint is permitted but should be flagged.
    double radius_hint() const noexcept;

    bool in_trust(Complex z) const noexcept;

    TaylorSeries truncated(int order) const;

    friend TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b);
    friend TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b);
    friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b);
    friend TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b);
    friend TaylorSeries operator-(const TaylorSeries& a);
    friend TaylorSeries operator*(const TaylorSeries& a, Complex s);
    friend TaylorSeries operator*(Complex s, const TaylorSeries& a);
    friend TaylorSeries operator+(const TaylorSeries& a, Complex s);
    friend TaylorSeries operator-(const TaylorSeries& a, Complex s);

  private:
    Complex center_;
    std::vector<Complex> coeffs_;
};

/// outer(inner). Requires inner's constant term to equal outer's center
/// (within kEpsZero); the result lives at inner's center.
TaylorSeries compose(const TaylorSeries& outer, const TaylorSeries& inner);

TaylorSeries exp(const TaylorSeries& a);

/// Principal branch at the center; requires a nonvanishing constant term.
/// Branch continuity is per-expansion, not per-path: values of the input
/// crossing the negative real axis away from the center do not raise.
TaylorSeries log(const TaylorSeries& a);

/// exp(k * log(a)) on the principal branch. Exact nonnegative small-integer
/// exponents take the repeated-multiplication path for accuracy; either way
/// the constant term must be nonvanishing.
TaylorSeries pow(const TaylorSeries& a, Complex k);

/// a^n by repeated squaring; the only power form that admits a vanishing
/// constant term (n >= 0).
TaylorSeries pow_int(const TaylorSeries& a, long n);

}  // namespace logh
