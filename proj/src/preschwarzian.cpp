#include "logh/preschwarzian.hpp"

#include <cmath>

namespace logh {

namespace {

constexpr double kDegenerate = 1e-9;

/// 1 - |w|^2, raising once the hypothesis |omega| < 1 is numerically void.
double guard_dilatation(Complex w) {
    const double d = 1.0 - std::norm(w);
    if (d < kDegenerate) {
        throw Error(Errc::degenerate_dilatation, "|omega| too close to 1");
    }
    return d;
}

}  // namespace

Complex analytic_pre_schwarzian(const TaylorSeries& dphi, const TaylorSeries& ddphi, Complex z) {
    const Complex d1 = dphi.eval(z);
    if (std::abs(d1) <= kEpsZero) {
        throw Error(Errc::critical_point, "phi' vanishes at the evaluation point");
    }
    return ddphi.eval(z) / d1;
}

Complex analytic_pre_schwarzian(const TaylorSeries& phi, Complex z) {
    const TaylorSeries d1 = phi.derivative();
    return analytic_pre_schwarzian(d1, d1.derivative(), z);
}

Complex harmonic_pre_schwarzian(const HarmonicLift& lift, Complex z) {
    const Complex w = lift.dilatation().eval(z);
    const double denom = guard_dilatation(w);
    const Complex head = analytic_pre_schwarzian(lift.d_analytic(), lift.dd_analytic(), z);
    return head - lift.dilatation_derivative().eval(z) * std::conj(w) / denom;
}

PreSchwarzianValue pre_schwarzian(const LogharmonicMap& f, Complex z) {
    const Complex hz = f.h().eval(z);
    if (std::abs(hz) <= kEpsZero) {
        throw Error(Errc::critical_point, "h vanishes at the evaluation point");
    }
    const Complex w = f.dilatation().eval(z);
    const double denom = guard_dilatation(w);

    PreSchwarzianValue out;
    out.analytic_part = analytic_pre_schwarzian(f.dh(), f.ddh(), z);
    out.mixing_part = w * (f.dh().eval(z) / hz);
    out.dilatation_part = f.dilatation_derivative().eval(z) * std::conj(w) / denom;
    out.value = out.analytic_part + out.mixing_part - out.dilatation_part;
    out.in_trust = f.in_trust(z);
    return out;
}

double dbar_pre_schwarzian(const LogharmonicMap& f, Complex z) {
    const double denom = guard_dilatation(f.dilatation().eval(z));
    const double dw = std::abs(f.dilatation_derivative().eval(z));
    return dw * dw / (denom * denom);
}

PowerReduction analytic_power_reduction(const LogharmonicMap& f, Complex z0) {
    const Complex w0 = f.dilatation().eval(z0);
    const double denom = guard_dilatation(w0);
    PowerReduction out;
    out.a = (1.0 + w0) / denom;
    out.b = -std::conj(w0) * out.a;
    const TaylorSeries phi = pow(f.h(), out.a) * pow(f.g(), out.b);
    out.value = analytic_pre_schwarzian(phi, z0);
    return out;
}

Complex pre_schwarzian_hg_route(const LogharmonicMap& f, Complex z) {
    const Complex w = f.dilatation().eval(z);
    const double denom = guard_dilatation(w);
    const TaylorSeries hg = f.dh() * f.g();
    const Complex hg_z = hg.eval(z);
    if (std::abs(hg_z) <= kEpsZero) {
        throw Error(Errc::critical_point, "h'g vanishes at the evaluation point");
    }
    return hg.derivative().eval(z) / hg_z -
           f.dilatation_derivative().eval(z) * std::conj(w) / denom;
}

}  // namespace logh
