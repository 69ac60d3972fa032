#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "logh/series.hpp"

namespace logh {

/// Byte range [begin, end) into the source text.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// Immutable expression tree. `pow` stores its exponent as a z-free
/// subexpression (enforced at parse time), matching the grammar where
/// ^ only takes constant complex exponents.
struct Expr {
    enum class Kind { literal, variable, negate, add, sub, mul, div, pow, exp_fn, log_fn };

    Kind kind;
    Complex value{};  // literal only
    std::shared_ptr<const Expr> lhs;
    std::shared_ptr<const Expr> rhs;  // binary ops and pow's exponent
    SourceSpan span{};
};

using ExprPtr = std::shared_ptr<const Expr>;

struct ParseDiag {
    std::size_t offset = 0;
    std::string expected;
};

struct ParseResult {
    ExprPtr ast;                     // null on failure
    std::optional<ParseDiag> error;  // set on failure
    bool ok() const noexcept { return ast != nullptr; }
};

/// Total: any input yields either an AST or a diagnostic, never a crash.
///
/// Grammar (whitespace insignificant):
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' unary)?          right-associative, exponent z-free
///   atom   := number['i'] | 'i' | 'z' | 'exp(' expr ')' | 'log(' expr ')' | '(' expr ')'
ParseResult try_parse(std::string_view text);

/// Throwing wrapper around try_parse; raises Errc::parse_error with the
/// diagnostic offset.
ExprPtr parse(std::string_view text);

/// Taylor-expands the expression at `center` to `order` by structural
/// recursion into the series engine. Zero-constant-term failures carry the
/// offending subexpression's source offset. Integer exponents are expanded
/// by repeated multiplication and therefore tolerate a vanishing base.
TaylorSeries compile(const ExprPtr& ast, Complex center, int order);

/// Direct pointwise evaluation with principal branches; the independent
/// oracle against compile + eval. Raises Errc::eval_domain on poles,
/// log(0), and zero raised to a non-positive power.
Complex evaluate(const ExprPtr& ast, Complex z);

}  // namespace logh
