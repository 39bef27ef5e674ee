#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "swcert/error.hpp"

namespace swcert::gexpr {

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class EvalError : public Error {
public:
    using Error::Error;
};

namespace detail {
struct Node;
}

// Immutable arithmetic expression in one variable t.
//
// Grammar (loosest to tightest): + -, * /, unary -, ^ (right associative),
// atoms: numeric literal, t, f(expr), (expr) with f one of
// sqrt, cosh, sinh, exp, log, abs.
class Expr {
public:
    Expr() = default;

    double operator()(double t) const { return eval(t); }
    double eval(double t) const;
    std::string str() const;
    bool empty() const { return root_ == nullptr; }

private:
    friend Expr parse(std::string_view);
    explicit Expr(std::shared_ptr<const detail::Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const detail::Node> root_;
};

// Throws ParseError with the byte offset of the failure.
Expr parse(std::string_view text);

inline double eval(const Expr& e, double t) { return e.eval(t); }
inline std::string to_string(const Expr& e) { return e.str(); }

// Central difference (f(t+h) - f(t-h)) / 2h; step <= 0 selects the default
// 1e-6 * max(1, |t|).
double numeric_derivative(const Expr& e, double t, double step = 0.0);

}  // namespace swcert::gexpr
