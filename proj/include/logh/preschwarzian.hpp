#pragma once

#include "logh/logharmonic.hpp"

namespace logh {

/// P_f at a point, split into the three summands of
///   P_f = h''/h' + omega h'/h - omega' conj(omega) / (1 - |omega|^2).
/// `value` is always the exact floating-point sum of the components, and
/// when omega vanishes identically it coincides bit-for-bit with the
/// analytic pre-Schwarzian of h.
struct PreSchwarzianValue {
    Complex value;
    Complex analytic_part;
    Complex mixing_part;
    Complex dilatation_part;
    bool in_trust = true;
};

/// phi''(z) / phi'(z) for an analytic map given as a series.
Complex analytic_pre_schwarzian(const TaylorSeries& phi, Complex z);

/// Same, with the derivative series precomputed by the caller (hot loops).
Complex analytic_pre_schwarzian(const TaylorSeries& dphi, const TaylorSeries& ddphi, Complex z);

/// Pre-Schwarzian of the harmonic mapping H + conj(G):
///   H''/H' - omega_F' conj(omega_F) / (1 - |omega_F|^2).
Complex harmonic_pre_schwarzian(const HarmonicLift& lift, Complex z);

PreSchwarzianValue pre_schwarzian(const LogharmonicMap& f, Complex z);

/// d P_f / d conj(z) = |omega'|^2 / (1 - |omega|^2)^2; real and nonnegative.
double dbar_pre_schwarzian(const LogharmonicMap& f, Complex z);

/// P_f(z0) realized as the analytic pre-Schwarzian of the single power map
/// phi = h^a g^b with a = (1 + omega(z0)) / (1 - |omega(z0)|^2) and
/// b = -conj(omega(z0)) a. The exponents depend on the point.
struct PowerReduction {
    Complex a;
    Complex b;
    Complex value;
};

PowerReduction analytic_power_reduction(const LogharmonicMap& f, Complex z0);

/// P_f evaluated through the algebraically equivalent route
///   (h'g)'/(h'g) - omega' conj(omega)/(1 - |omega|^2).
Complex pre_schwarzian_hg_route(const LogharmonicMap& f, Complex z);

}  // namespace logh
