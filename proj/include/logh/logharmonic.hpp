#pragma once

#include <vector>

#include "logh/series.hpp"

namespace logh {

struct WirtingerPair {
    Complex d_z;
    Complex d_zbar;
};

/// Lift of a nonvanishing map to logarithmic coordinates: the harmonic
/// mapping analytic_part + conj(co_analytic_part).
class HarmonicLift {
  public:
    HarmonicLift(TaylorSeries analytic_part, TaylorSeries co_analytic_part);

    const TaylorSeries& analytic() const noexcept { return h_; }
    const TaylorSeries& co_analytic() const noexcept { return g_; }

    /// Second complex dilatation of the lift: co_analytic' / analytic'.
    const TaylorSeries& dilatation() const noexcept { return omega_; }
    const TaylorSeries& dilatation_derivative() const noexcept { return domega_; }

    const TaylorSeries& d_analytic() const noexcept { return dh_; }
    const TaylorSeries& dd_analytic() const noexcept { return ddh_; }

    Complex eval(Complex z) const noexcept;
    Complex center() const noexcept { return h_.center(); }

  private:
    TaylorSeries h_, g_;
    TaylorSeries dh_, ddh_, omega_, domega_;
};

/// Sense-preserving nonvanishing map f = h * conj(g), represented by the
/// analytic factors as series with a shared center and order.
///
/// Construction enforces: h and g nonvanishing at the center, h locally
/// univalent at the center, and |omega(center)| < 1. The dilatation and the
/// derivative series are precomputed once; instances are immutable and safe
/// to share across threads.
class LogharmonicMap {
  public:
    LogharmonicMap(TaylorSeries h, TaylorSeries g);

    const TaylorSeries& h() const noexcept { return h_; }
    const TaylorSeries& g() const noexcept { return g_; }
    const TaylorSeries& dh() const noexcept { return dh_; }
    const TaylorSeries& ddh() const noexcept { return ddh_; }
    const TaylorSeries& dg() const noexcept { return dg_; }

    /// omega = g' h / (g h'), the Schwarz function measuring the deviation
    /// from analyticity.
    const TaylorSeries& dilatation() const noexcept { return omega_; }
    const TaylorSeries& dilatation_derivative() const noexcept { return domega_; }

    Complex center() const noexcept { return h_.center(); }
    int order() const noexcept { return h_.order(); }

    Complex eval(Complex z) const noexcept;

    /// (f_z, f_zbar) = (h'(z) conj(g(z)), h(z) conj(g'(z))).
    WirtingerPair wirtinger(Complex z) const noexcept;

    /// J_f = |f_z|^2 (1 - |omega|^2); positive wherever |omega(z)| < 1.
    double jacobian(Complex z) const noexcept;

    /// The partner h * conj(g^lambda) whose dilatation is lambda * omega.
    /// Requires |lambda| = 1 to 1e-12.
    LogharmonicMap rotate_dilatation(Complex lambda) const;

    /// (log h, log g) on principal branches at the center.
    HarmonicLift log_lift() const;

    /// Radius inside which series evaluations of both factors are trusted,
    /// additionally capped at 0.9 since the maps of interest live on the
    /// unit disk.
    double evaluation_radius() const noexcept;

    bool in_trust(Complex z) const noexcept;

    /// Default identity-check grid: 32 radii uniform in
    /// (0, 0.8 * evaluation_radius] by 64 equispaced angles.
    std::vector<Complex> evaluation_grid() const;

  private:
    TaylorSeries h_, g_;
    TaylorSeries dh_, ddh_, dg_, omega_, domega_;
};

}  // namespace logh
