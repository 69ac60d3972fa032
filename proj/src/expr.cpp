#include "logh/expr.hpp"

#include <cctype>
#include <cmath>
#include <utility>

namespace logh {

namespace {

struct ParseFailure {
    std::size_t offset;
    std::string expected;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr run() {
        skip_ws();
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("end of input");
        }
        return e;
    }

  private:
    [[noreturn]] void fail(std::string expected) const {
        throw ParseFailure{pos_, std::move(expected)};
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek_is(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    bool consume(char c) {
        if (peek_is(c)) {
            ++pos_;
            skip_ws();
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) fail(what);
    }

    static ExprPtr node(Expr::Kind kind, SourceSpan span, ExprPtr lhs = nullptr,
                        ExprPtr rhs = nullptr, Complex value = {}) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->value = value;
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        e->span = span;
        return e;
    }

    static bool contains_variable(const Expr& e) {
        if (e.kind == Expr::Kind::variable) return true;
        if (e.lhs && contains_variable(*e.lhs)) return true;
        if (e.rhs && contains_variable(*e.rhs)) return true;
        return false;
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        for (;;) {
            const std::size_t at = pos_;
            if (consume('+')) {
                ExprPtr rhs = parse_term();
                lhs = node(Expr::Kind::add, {lhs->span.begin, rhs->span.end}, lhs, rhs);
            } else if (consume('-')) {
                ExprPtr rhs = parse_term();
                lhs = node(Expr::Kind::sub, {lhs->span.begin, rhs->span.end}, lhs, rhs);
            } else {
                (void)at;
                return lhs;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            if (consume('*')) {
                ExprPtr rhs = parse_unary();
                lhs = node(Expr::Kind::mul, {lhs->span.begin, rhs->span.end}, lhs, rhs);
            } else if (consume('/')) {
                ExprPtr rhs = parse_unary();
                lhs = node(Expr::Kind::div, {lhs->span.begin, rhs->span.end}, lhs, rhs);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_unary() {
        const std::size_t begin = pos_;
        if (consume('-')) {
            ExprPtr inner = parse_unary();
            return node(Expr::Kind::negate, {begin, inner->span.end}, inner);
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        const std::size_t caret = pos_;
        if (consume('^')) {
            ExprPtr exponent = parse_unary();  // right-associative
            if (contains_variable(*exponent)) {
                throw ParseFailure{caret, "constant exponent (z is not allowed after ^)"};
            }
            return node(Expr::Kind::pow, {base->span.begin, exponent->span.end}, base, exponent);
        }
        return base;
    }

    ExprPtr parse_atom() {
        const std::size_t begin = pos_;
        if (pos_ >= text_.size()) fail("an operand");
        const char c = text_[pos_];

        if (c == '(') {
            ++pos_;
            skip_ws();
            ExprPtr inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return parse_number(begin);
        }
        if (c == 'z') {
            ++pos_;
            skip_ws();
            return node(Expr::Kind::variable, {begin, begin + 1});
        }
        if (c == 'i') {
            ++pos_;
            skip_ws();
            return node(Expr::Kind::literal, {begin, begin + 1}, nullptr, nullptr, Complex(0, 1));
        }
        if (text_.substr(pos_).starts_with("exp")) {
            pos_ += 3;
            skip_ws();
            expect('(', "'(' after exp");
            ExprPtr inner = parse_expr();
            expect(')', "')'");
            return node(Expr::Kind::exp_fn, {begin, pos_}, inner);
        }
        if (text_.substr(pos_).starts_with("log")) {
            pos_ += 3;
            skip_ws();
            expect('(', "'(' after log");
            ExprPtr inner = parse_expr();
            expect(')', "')'");
            return node(Expr::Kind::log_fn, {begin, pos_}, inner);
        }
        fail("a number, 'z', 'i', 'exp', 'log', or '('");
    }

    ExprPtr parse_number(std::size_t begin) {
        std::size_t end = pos_;
        auto digits = [&] {
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
                ++end;
            }
        };
        digits();
        if (end < text_.size() && text_[end] == '.') {
            ++end;
            const std::size_t frac_start = end;
            digits();
            if (end == frac_start) {
                pos_ = end;
                fail("digits after decimal point");
            }
        }
        if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
            std::size_t exp_at = end + 1;
            if (exp_at < text_.size() && (text_[exp_at] == '+' || text_[exp_at] == '-')) {
                ++exp_at;
            }
            std::size_t exp_digits = exp_at;
            while (exp_digits < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[exp_digits]))) {
                ++exp_digits;
            }
            if (exp_digits > exp_at) end = exp_digits;
        }
        const double mag = std::stod(std::string(text_.substr(begin, end - begin)));
        bool imaginary = false;
        if (end < text_.size() && text_[end] == 'i') {
            imaginary = true;
            ++end;
        }
        pos_ = end;
        skip_ws();
        const Complex v = imaginary ? Complex(0, mag) : Complex(mag, 0);
        return node(Expr::Kind::literal, {begin, end}, nullptr, nullptr, v);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ParseResult try_parse(std::string_view text) {
    try {
        Parser p(text);
        return ParseResult{p.run(), std::nullopt};
    } catch (const ParseFailure& f) {
        return ParseResult{nullptr, ParseDiag{f.offset, f.expected}};
    }
}

ExprPtr parse(std::string_view text) {
    ParseResult r = try_parse(text);
    if (!r.ok()) {
        throw Error(Errc::parse_error,
                    "parse error at offset " + std::to_string(r.error->offset) + ": expected " +
                        r.error->expected,
                    r.error->offset);
    }
    return r.ast;
}

namespace {

std::optional<long> exact_integer(Complex v) {
    if (v.imag() != 0.0) return std::nullopt;
    const double r = v.real();
    if (r != std::floor(r) || std::abs(r) > 1e9) return std::nullopt;
    return static_cast<long>(r);
}

Complex evaluate_constant(const Expr& e, std::size_t at) {
    // Exponent subtrees are z-free by construction; evaluate directly.
    try {
        return evaluate(std::make_shared<const Expr>(e), Complex{});
    } catch (const Error& err) {
        throw Error(err.code(), std::string(err.what()) + " (in constant exponent)", at);
    }
}

}  // namespace

TaylorSeries compile(const ExprPtr& ast, Complex center, int order) {
    const Expr& e = *ast;
    switch (e.kind) {
        case Expr::Kind::literal:
            return TaylorSeries::constant(e.value, center, order);
        case Expr::Kind::variable:
            return TaylorSeries::variable(center, order);
        case Expr::Kind::negate:
            return -compile(e.lhs, center, order);
        case Expr::Kind::add:
            return compile(e.lhs, center, order) + compile(e.rhs, center, order);
        case Expr::Kind::sub:
            return compile(e.lhs, center, order) - compile(e.rhs, center, order);
        case Expr::Kind::mul:
            return compile(e.lhs, center, order) * compile(e.rhs, center, order);
        case Expr::Kind::div:
            try {
                return compile(e.lhs, center, order) / compile(e.rhs, center, order);
            } catch (const Error& err) {
                if (err.code() == Errc::zero_constant_term && !err.has_offset()) {
                    throw Error(err.code(), "divisor vanishes at the expansion center",
                                e.rhs->span.begin);
                }
                throw;
            }
        case Expr::Kind::exp_fn:
            return exp(compile(e.lhs, center, order));
        case Expr::Kind::log_fn:
            try {
                return log(compile(e.lhs, center, order));
            } catch (const Error& err) {
                if (err.code() == Errc::zero_constant_term && !err.has_offset()) {
                    throw Error(err.code(), "log argument vanishes at the expansion center",
                                e.lhs->span.begin);
                }
                throw;
            }
        case Expr::Kind::pow: {
            const Complex k = evaluate_constant(*e.rhs, e.rhs->span.begin);
            TaylorSeries base = compile(e.lhs, center, order);
            if (auto n = exact_integer(k); n && *n >= 0) {
                return pow_int(base, *n);
            }
            try {
                return pow(base, k);
            } catch (const Error& err) {
                if (err.code() == Errc::zero_constant_term && !err.has_offset()) {
                    throw Error(err.code(),
                                "base of a non-integer power vanishes at the expansion center",
                                e.lhs->span.begin);
                }
                throw;
            }
        }
    }
    throw Error(Errc::eval_domain, "corrupt expression node");
}

Complex evaluate(const ExprPtr& ast, Complex z) {
    const Expr& e = *ast;
    switch (e.kind) {
        case Expr::Kind::literal:
            return e.value;
        case Expr::Kind::variable:
            return z;
        case Expr::Kind::negate:
            return -evaluate(e.lhs, z);
        case Expr::Kind::add:
            return evaluate(e.lhs, z) + evaluate(e.rhs, z);
        case Expr::Kind::sub:
            return evaluate(e.lhs, z) - evaluate(e.rhs, z);
        case Expr::Kind::mul:
            return evaluate(e.lhs, z) * evaluate(e.rhs, z);
        case Expr::Kind::div: {
            const Complex d = evaluate(e.rhs, z);
            if (d == Complex{}) {
                throw Error(Errc::eval_domain, "division by zero", e.rhs->span.begin);
            }
            return evaluate(e.lhs, z) / d;
        }
        case Expr::Kind::exp_fn:
            return std::exp(evaluate(e.lhs, z));
        case Expr::Kind::log_fn: {
            const Complex a = evaluate(e.lhs, z);
            if (a == Complex{}) {
                throw Error(Errc::eval_domain, "log of zero", e.lhs->span.begin);
            }
            return std::log(a);
        }
        case Expr::Kind::pow: {
            const Complex base = evaluate(e.lhs, z);
            const Complex k = evaluate(e.rhs, Complex{});
            if (auto n = exact_integer(k)) {
                if (base == Complex{}) {
                    if (*n > 0) return Complex{};
                    if (*n == 0) return Complex(1, 0);
                    throw Error(Errc::eval_domain, "zero base with negative exponent",
                                e.lhs->span.begin);
                }
                // Integer powers stay exact (and branch-free) via squaring.
                Complex acc(1, 0);
                Complex b = base;
                unsigned long m = static_cast<unsigned long>(*n < 0 ? -*n : *n);
                while (m > 0) {
                    if (m & 1UL) acc *= b;
                    if (m >>= 1UL) b *= b;
                }
                return *n < 0 ? Complex(1, 0) / acc : acc;
            }
            if (base == Complex{}) {
                throw Error(Errc::eval_domain, "zero base with non-integer exponent",
                            e.lhs->span.begin);
            }
            return std::exp(k * std::log(base));
        }
    }
    throw Error(Errc::eval_domain, "corrupt expression node");
}

}  // namespace logh
