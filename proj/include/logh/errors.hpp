#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace logh {

/// Error categories shared across the library. Every throwing operation
/// raises logh::Error with one of these codes so callers (and the CLI)
/// can map failures to stable identifiers.
enum class Errc {
    zero_constant_term,     // division/log/pow of a series vanishing at its center
    center_mismatch,        // binary op or compose with inconsistent centers
    non_finite,             // coefficient overflowed or became NaN
    outside_radius,         // recenter target outside the trust radius
    parse_error,            // malformed expression text
    eval_domain,            // pointwise evaluation hit a pole / log of zero
    critical_point,         // derivative (or value) vanishes where it must not
    degenerate_dilatation,  // |omega| too close to 1
    not_unimodular,         // rotation factor with |lambda| != 1
    zero_exponent,          // power postcomposition with a = 0
    recursion_breakdown,    // series recursion lost its leading coefficient
    branch_miss,            // closed-form inversion landed on the wrong branch
    zero_argument,          // inversion of w = 0
    singular_fit,           // degenerate least-squares sample geometry
    bad_constant,           // inadmissible Ahlfors constant
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Error(Errc code, std::string message, std::size_t offset)
        : std::runtime_error(std::move(message)), code_(code), offset_(offset), has_offset_(true) {}

    Errc code() const noexcept { return code_; }

    /// Byte offset into the source text, when the error originates from
    /// parsing or compiling an expression.
    bool has_offset() const noexcept { return has_offset_; }
    std::size_t offset() const noexcept { return offset_; }

  private:
    Errc code_;
    std::size_t offset_ = 0;
    bool has_offset_ = false;
};

}  // namespace logh
