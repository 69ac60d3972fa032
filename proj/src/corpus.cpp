#include "logh/corpus.hpp"

#include <cmath>
#include <numbers>

namespace logh {

Complex Rng::in_disk(double radius) noexcept {
    const double r = radius * std::sqrt(uniform());
    const double th = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(th), r * std::sin(th)};
}

Complex Rng::on_circle() noexcept {
    const double th = 2.0 * std::numbers::pi * uniform();
    return {std::cos(th), std::sin(th)};
}

namespace {

TaylorSeries random_exp_poly(Rng& rng, const CorpusConfig& cfg) {
    std::vector<Complex> c(static_cast<std::size_t>(cfg.order) + 1, Complex{});
    for (int i = 0; i <= cfg.poly_degree; ++i) {
        c[static_cast<std::size_t>(i)] = rng.in_disk(cfg.coeff_radius);
    }
    return exp(TaylorSeries(Complex{}, std::move(c)));
}

bool sense_preserving_on_grid(const LogharmonicMap& m) {
    const TaylorSeries& omega = m.dilatation();
    for (const Complex& z : m.evaluation_grid()) {
        if (std::abs(omega.eval(z)) >= 1.0) return false;
    }
    return true;
}

}  // namespace

LogharmonicMap random_map(Rng& rng, const CorpusConfig& cfg) {
    for (;;) {
        try {
            LogharmonicMap m(random_exp_poly(rng, cfg), random_exp_poly(rng, cfg));
            if (sense_preserving_on_grid(m)) return m;
        } catch (const Error&) {
            // constructor rejected the draw (|omega(0)| >= 1 or h'(0) ~ 0)
        }
    }
}

std::vector<LogharmonicMap> make_corpus(const CorpusConfig& cfg) {
    Rng rng(cfg.seed);
    std::vector<LogharmonicMap> maps;
    maps.reserve(static_cast<std::size_t>(cfg.count));
    for (int i = 0; i < cfg.count; ++i) {
        maps.push_back(random_map(rng, cfg));
    }
    return maps;
}

}  // namespace logh
