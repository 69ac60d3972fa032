#include "logh/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace logh {

namespace {

bool finite(Complex v) noexcept {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

void require_same_center(const TaylorSeries& a, const TaylorSeries& b) {
    if (std::abs(a.center() - b.center()) > kEpsZero) {
        throw Error(Errc::center_mismatch, "series centers differ");
    }
}

int min_order(const TaylorSeries& a, const TaylorSeries& b) {
    return std::min(a.order(), b.order());
}

}  // namespace

TaylorSeries::TaylorSeries(Complex center, std::vector<Complex> coeffs)
    : center_(center), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error(Errc::non_finite, "series needs at least the constant coefficient");
    }
    if (!finite(center_)) {
        throw Error(Errc::non_finite, "series center is not finite");
    }
    for (const Complex& c : coeffs_) {
        if (!finite(c)) {
            throw Error(Errc::non_finite, "series coefficient is not finite");
        }
    }
}

TaylorSeries TaylorSeries::constant(Complex value, Complex center, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{});
    c[0] = value;
    return TaylorSeries(center, std::move(c));
}

TaylorSeries TaylorSeries::variable(Complex center, int order) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{});
    c[0] = center;
    if (order >= 1) c[1] = 1.0;
    return TaylorSeries(center, std::move(c));
}

Complex TaylorSeries::eval(Complex z) const noexcept {
    const Complex w = z - center_;
    Complex acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        acc = acc * w + *it;
    }
    return acc;
}

TaylorSeries TaylorSeries::derivative() const {
    if (order() == 0) {
        return constant(Complex{}, center_, 0);
    }
    std::vector<Complex> c(coeffs_.size() - 1);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        c[n - 1] = static_cast<double>(n) * coeffs_[n];
    }
    return TaylorSeries(center_, std::move(c));
}

TaylorSeries TaylorSeries::antiderivative(Complex constant) const {
    std::vector<Complex> c(coeffs_.size() + 1);
    c[0] = constant;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        c[n + 1] = coeffs_[n] / static_cast<double>(n + 1);
    }
    return TaylorSeries(center_, std::move(c));
}

TaylorSeries TaylorSeries::recenter(Complex new_center) const {
    const Complex d = new_center - center_;
    if (!(std::abs(d) < radius_hint())) {
        throw Error(Errc::outside_radius, "recenter target outside the trust radius");
    }
    // Repeated synthetic division shifts the expansion point in place.
    std::vector<Complex> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t j = 0; j + 1 < n; ++j) {
        for (std::size_t i = n - 1; i > j; --i) {
            c[i - 1] += d * c[i];
        }
    }
    return TaylorSeries(new_center, std::move(c));
}

double TaylorSeries::radius_hint() const noexcept {
    // Ratio test on the last two nonvanishing coefficients; spacing > 1
    // (even/odd series) is absorbed by the 1/(j-i) root.
    const double inf = std::numeric_limits<double>::infinity();
    int j = order();
    while (j >= 0 && std::abs(coeffs_[static_cast<std::size_t>(j)]) == 0.0) --j;
    if (j <= 0) return inf;
    int i = j - 1;
    while (i >= 0 && std::abs(coeffs_[static_cast<std::size_t>(i)]) == 0.0) --i;
    if (i < 0) return inf;
    const double ratio = std::abs(coeffs_[static_cast<std::size_t>(i)]) /
                         std::abs(coeffs_[static_cast<std::size_t>(j)]);
    return 0.5 * std::pow(ratio, 1.0 / static_cast<double>(j - i));
}

bool TaylorSeries::in_trust(Complex z) const noexcept {
    return std::abs(z - center_) < radius_hint();
}

TaylorSeries TaylorSeries::truncated(int order) const {
    if (order >= this->order()) return *this;
    std::vector<Complex> c(coeffs_.begin(), coeffs_.begin() + order + 1);
    return TaylorSeries(center_, std::move(c));
}

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) {
    require_same_center(a, b);
    const int n = min_order(a, b);
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(i)] = a.coeffs_[static_cast<std::size_t>(i)] +
                                         b.coeffs_[static_cast<std::size_t>(i)];
    }
    return TaylorSeries(a.center_, std::move(c));
}

TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) {
    require_same_center(a, b);
    const int n = min_order(a, b);
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(i)] = a.coeffs_[static_cast<std::size_t>(i)] -
                                         b.coeffs_[static_cast<std::size_t>(i)];
    }
    return TaylorSeries(a.center_, std::move(c));
}

TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
    require_same_center(a, b);
    const int n = min_order(a, b);
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex{});
    for (int i = 0; i <= n; ++i) {
        const Complex ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (ai == Complex{}) continue;
        for (int j = 0; i + j <= n; ++j) {
            c[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return TaylorSeries(a.center_, std::move(c));
}

TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b) {
    require_same_center(a, b);
    const Complex b0 = b.coeffs_[0];
    if (std::abs(b0) <= kEpsZero) {
        throw Error(Errc::zero_constant_term, "division by a series vanishing at its center");
    }
    const int n = min_order(a, b);
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        Complex acc = a.coeffs_[static_cast<std::size_t>(m)];
        for (int k = 1; k <= m; ++k) {
            acc -= b.coeffs_[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - k)];
        }
        c[static_cast<std::size_t>(m)] = acc / b0;
    }
    return TaylorSeries(a.center_, std::move(c));
}

TaylorSeries operator-(const TaylorSeries& a) {
    std::vector<Complex> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs_[i];
    return TaylorSeries(a.center_, std::move(c));
}

TaylorSeries operator*(const TaylorSeries& a, Complex s) {
    std::vector<Complex> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] * s;
    return TaylorSeries(a.center_, std::move(c));
}

TaylorSeries operator*(Complex s, const TaylorSeries& a) { return a * s; }

TaylorSeries operator+(const TaylorSeries& a, Complex s) {
    std::vector<Complex> c = a.coeffs_;
    c[0] += s;
    return TaylorSeries(a.center_, std::move(c));
}

TaylorSeries operator-(const TaylorSeries& a, Complex s) { return a + (-s); }

TaylorSeries compose(const TaylorSeries& outer, const TaylorSeries& inner) {
    if (std::abs(inner.coeff(0) - outer.center()) > kEpsZero) {
        throw Error(Errc::center_mismatch,
                    "compose requires inner's constant term to equal outer's center");
    }
    const int n = std::min(outer.order(), inner.order());
    // w = inner - inner(center) has no constant term, so the truncated
    // Horner recursion below reproduces the exact composition coefficients
    // through order n.
    std::vector<Complex> wc(inner.coeffs().begin(), inner.coeffs().begin() + n + 1);
    wc[0] = Complex{};
    const TaylorSeries w(inner.center(), std::move(wc));

    TaylorSeries acc = TaylorSeries::constant(outer.coeff(n), inner.center(), n);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * w + outer.coeff(k);
    }
    return acc;
}

TaylorSeries exp(const TaylorSeries& a) {
    const int n = a.order();
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    c[0] = std::exp(a.coeff(0));
    // b' = a' b  =>  n b_n = sum_{k=1..n} k a_k b_{n-k}
    for (int m = 1; m <= n; ++m) {
        Complex acc{};
        for (int k = 1; k <= m; ++k) {
            acc += static_cast<double>(k) * a.coeff(k) * c[static_cast<std::size_t>(m - k)];
        }
        c[static_cast<std::size_t>(m)] = acc / static_cast<double>(m);
    }
    return TaylorSeries(a.center(), std::move(c));
}

TaylorSeries log(const TaylorSeries& a) {
    const Complex a0 = a.coeff(0);
    if (std::abs(a0) <= kEpsZero) {
        throw Error(Errc::zero_constant_term, "log of a series vanishing at its center");
    }
    const int n = a.order();
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    c[0] = std::log(a0);
    // a b' = a'  =>  n a_0 b_n = n a_n - sum_{j=1..n-1} (n-j) a_j b_{n-j}
    for (int m = 1; m <= n; ++m) {
        Complex acc = static_cast<double>(m) * a.coeff(m);
        for (int j = 1; j < m; ++j) {
            acc -= static_cast<double>(m - j) * a.coeff(j) * c[static_cast<std::size_t>(m - j)];
        }
        c[static_cast<std::size_t>(m)] = acc / (static_cast<double>(m) * a0);
    }
    return TaylorSeries(a.center(), std::move(c));
}

TaylorSeries pow_int(const TaylorSeries& a, long n) {
    if (n < 0) {
        throw Error(Errc::zero_exponent, "pow_int requires a nonnegative exponent");
    }
    TaylorSeries result = TaylorSeries::constant(1.0, a.center(), a.order());
    TaylorSeries base = a;
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1UL) result = result * base;
        if (e >>= 1UL) base = base * base;
    }
    return result;
}

TaylorSeries pow(const TaylorSeries& a, Complex k) {
    if (std::abs(a.coeff(0)) <= kEpsZero) {
        throw Error(Errc::zero_constant_term, "pow of a series vanishing at its center");
    }
    const double kr = k.real();
    if (k.imag() == 0.0 && kr == std::floor(kr) && kr >= 0.0 && kr <= 64.0) {
        return pow_int(a, static_cast<long>(kr));
    }
    return exp(k * log(a));
}

}  // namespace logh
