#include "logh/logharmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace logh {

namespace {

void require_pair(const TaylorSeries& h, const TaylorSeries& g) {
    if (std::abs(h.center() - g.center()) > kEpsZero) {
        throw Error(Errc::center_mismatch, "h and g must share a center");
    }
    if (h.order() != g.order()) {
        throw Error(Errc::center_mismatch, "h and g must share an order");
    }
}

}  // namespace

HarmonicLift::HarmonicLift(TaylorSeries analytic_part, TaylorSeries co_analytic_part)
    : h_(std::move(analytic_part)),
      g_(std::move(co_analytic_part)),
      dh_(h_.derivative()),
      ddh_(dh_.derivative()),
      omega_(g_.derivative() / dh_),
      domega_(omega_.derivative()) {
    require_pair(h_, g_);
    if (std::abs(dh_.coeff(0)) <= kEpsZero) {
        throw Error(Errc::critical_point, "lift's analytic part is not locally univalent");
    }
}

Complex HarmonicLift::eval(Complex z) const noexcept {
    return h_.eval(z) + std::conj(g_.eval(z));
}

LogharmonicMap::LogharmonicMap(TaylorSeries h, TaylorSeries g)
    : h_(std::move(h)),
      g_(std::move(g)),
      dh_(h_.derivative()),
      ddh_(dh_.derivative()),
      dg_(g_.derivative()),
      omega_((dg_ * h_) / (g_ * dh_)),
      domega_(omega_.derivative()) {
    require_pair(h_, g_);
    if (std::abs(h_.coeff(0)) <= kEpsZero) {
        throw Error(Errc::zero_constant_term, "h vanishes at the center");
    }
    if (std::abs(g_.coeff(0)) <= kEpsZero) {
        throw Error(Errc::zero_constant_term, "g vanishes at the center");
    }
    if (std::abs(dh_.coeff(0)) <= kEpsZero) {
        throw Error(Errc::critical_point, "h is not locally univalent at the center");
    }
    if (std::abs(omega_.coeff(0)) >= 1.0) {
        throw Error(Errc::degenerate_dilatation, "map is not sense-preserving at the center");
    }
}

Complex LogharmonicMap::eval(Complex z) const noexcept {
    return h_.eval(z) * std::conj(g_.eval(z));
}

WirtingerPair LogharmonicMap::wirtinger(Complex z) const noexcept {
    return {dh_.eval(z) * std::conj(g_.eval(z)), h_.eval(z) * std::conj(dg_.eval(z))};
}

double LogharmonicMap::jacobian(Complex z) const noexcept {
    const double fz = std::abs(dh_.eval(z) * std::conj(g_.eval(z)));
    const double w = std::abs(omega_.eval(z));
    return fz * fz * (1.0 - w * w);
}

LogharmonicMap LogharmonicMap::rotate_dilatation(Complex lambda) const {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12) {
        throw Error(Errc::not_unimodular, "dilatation rotation requires |lambda| = 1");
    }
    return LogharmonicMap(h_, pow(g_, lambda));
}

HarmonicLift LogharmonicMap::log_lift() const {
    return HarmonicLift(log(h_), log(g_));
}

double LogharmonicMap::evaluation_radius() const noexcept {
    const double trust =
        std::min({h_.radius_hint(), g_.radius_hint(), omega_.radius_hint()});
    return std::min(0.8 * trust, 0.9);
}

bool LogharmonicMap::in_trust(Complex z) const noexcept {
    const double r = std::abs(z - center());
    return r < h_.radius_hint() && r < g_.radius_hint();
}

std::vector<Complex> LogharmonicMap::evaluation_grid() const {
    constexpr int n_radii = 32;
    constexpr int n_angles = 64;
    const double r_max = evaluation_radius();
    std::vector<Complex> pts;
    pts.reserve(n_radii * n_angles);
    for (int j = 0; j < n_radii; ++j) {
        const double r = r_max * static_cast<double>(j + 1) / n_radii;
        for (int i = 0; i < n_angles; ++i) {
            const double th = 2.0 * std::numbers::pi * i / n_angles;
            pts.push_back(center() + Complex(r * std::cos(th), r * std::sin(th)));
        }
    }
    return pts;
}

}  // namespace logh
