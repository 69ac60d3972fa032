#pragma once

#include <cstdint>
#include <vector>

#include "logh/logharmonic.hpp"

namespace logh {

/// Deterministic RNG with platform-independent double extraction, so test
/// corpora and CLI reports are byte-stable for a given seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64() noexcept {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform over the closed disk of the given radius.
    Complex in_disk(double radius) noexcept;

    /// Uniform on the unit circle.
    Complex on_circle() noexcept;

  private:
    std::uint64_t state_;
};

/// Random sense-preserving test maps h = exp(p), g = exp(q) with p, q of
/// degree <= 4 and coefficients in the disk of radius 0.3. Draws are
/// rejected until |omega| < 1 holds on the map's evaluation grid, so the
/// univalence-theory hypotheses hold by construction.
struct CorpusConfig {
    std::uint64_t seed = 0;
    int count = 20;
    int order = kDefaultOrder;
    double coeff_radius = 0.3;
    int poly_degree = 4;
};

std::vector<LogharmonicMap> make_corpus(const CorpusConfig& config = {});

/// One corpus draw (also used to generate single maps in property tests).
LogharmonicMap random_map(Rng& rng, const CorpusConfig& config = {});

}  // namespace logh
