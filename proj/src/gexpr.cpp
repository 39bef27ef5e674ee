#include "swcert/gexpr.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>
#include <vector>

namespace swcert::gexpr {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : Error(message + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}

namespace detail {

enum class Op { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Call };

struct FuncDef {
    const char* name;
    double (*fn)(double);
    bool (*domain_ok)(double);
};

static bool always_ok(double) { return true; }
static bool nonnegative(double x) { return x >= 0.0; }
static bool positive(double x) { return x > 0.0; }

static constexpr int kNumFuncs = 6;
static const std::array<FuncDef, kNumFuncs> kFuncs = {{
    {"sqrt", [](double x) { return std::sqrt(x); }, nonnegative},
    {"cosh", [](double x) { return std::cosh(x); }, always_ok},
    {"sinh", [](double x) { return std::sinh(x); }, always_ok},
    {"exp", [](double x) { return std::exp(x); }, always_ok},
    {"log", [](double x) { return std::log(x); }, positive},
    {"abs", [](double x) { return std::abs(x); }, always_ok},
}};

struct Node {
    Op op;
    double value = 0.0;  // Number
    int func = -1;       // Call
    std::shared_ptr<const Node> a, b;
};

using NodePtr = std::shared_ptr<const Node>;

static double eval_node(const Node& n, double t) {
    switch (n.op) {
        case Op::Number: return n.value;
        case Op::Var: return t;
        case Op::Neg: return -eval_node(*n.a, t);
        case Op::Add: return eval_node(*n.a, t) + eval_node(*n.b, t);
        case Op::Sub: return eval_node(*n.a, t) - eval_node(*n.b, t);
        case Op::Mul: return eval_node(*n.a, t) * eval_node(*n.b, t);
        case Op::Div: {
            const double den = eval_node(*n.b, t);
            if (den == 0.0) throw EvalError("division by zero");
            return eval_node(*n.a, t) / den;
        }
        case Op::Pow: {
            const double base = eval_node(*n.a, t);
            const double expo = eval_node(*n.b, t);
            if (base == 0.0 && expo < 0.0) throw EvalError("zero raised to a negative power");
            if (base < 0.0 && expo != std::floor(expo))
                throw EvalError("negative base with non-integer exponent");
            const double r = std::pow(base, expo);
            if (!std::isfinite(r)) throw EvalError("power overflow");
            return r;
        }
        case Op::Call: {
            const double arg = eval_node(*n.a, t);
            const FuncDef& f = kFuncs[static_cast<std::size_t>(n.func)];
            if (!f.domain_ok(arg))
                throw EvalError(std::string(f.name) + " out of domain");
            const double r = f.fn(arg);
            if (!std::isfinite(r)) throw EvalError(std::string(f.name) + " overflow");
            return r;
        }
    }
    throw EvalError("corrupt expression");
}

// Precedence used when printing: add 1, mul 2, neg 3, pow 4, atom 5.
static int precedence(Op op) {
    switch (op) {
        case Op::Add:
        case Op::Sub: return 1;
        case Op::Mul:
        case Op::Div: return 2;
        case Op::Neg: return 3;
        case Op::Pow: return 4;
        default: return 5;
    }
}

static void print_node(const Node& n, std::string& out);

static void print_child(const Node& child, int min_prec, std::string& out) {
    if (precedence(child.op) < min_prec) {
        out += '(';
        print_node(child, out);
        out += ')';
    } else {
        print_node(child, out);
    }
}

static void print_node(const Node& n, std::string& out) {
    switch (n.op) {
        case Op::Number: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", n.value);
            out += buf;
            return;
        }
        case Op::Var: out += 't'; return;
        case Op::Neg:
            out += '-';
            print_child(*n.a, 3, out);
            return;
        case Op::Add:
            print_child(*n.a, 1, out);
            out += " + ";
            print_child(*n.b, 2, out);
            return;
        case Op::Sub:
            print_child(*n.a, 1, out);
            out += " - ";
            print_child(*n.b, 2, out);
            return;
        case Op::Mul:
            print_child(*n.a, 2, out);
            out += "*";
            print_child(*n.b, 3, out);
            return;
        case Op::Div:
            print_child(*n.a, 2, out);
            out += "/";
            print_child(*n.b, 3, out);
            return;
        case Op::Pow:
            print_child(*n.a, 5, out);  // left operand of ^ is always an atom
            out += "^";
            print_child(*n.b, 3, out);
            return;
        case Op::Call:
            out += kFuncs[static_cast<std::size_t>(n.func)].name;
            out += '(';
            print_node(*n.a, out);
            out += ')';
            return;
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr run() {
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
        auto n = std::make_shared<Node>();
        n->op = op;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }

    NodePtr parse_sum() {
        NodePtr lhs = parse_product();
        while (true) {
            if (accept('+'))
                lhs = make(Op::Add, lhs, parse_product());
            else if (accept('-'))
                lhs = make(Op::Sub, lhs, parse_product());
            else
                return lhs;
        }
    }

    NodePtr parse_product() {
        NodePtr lhs = parse_unary();
        while (true) {
            if (accept('*'))
                lhs = make(Op::Mul, lhs, parse_unary());
            else if (accept('/'))
                lhs = make(Op::Div, lhs, parse_unary());
            else
                return lhs;
        }
    }

    // Unary minus binds looser than ^, so -2^2 = -(2^2).
    NodePtr parse_unary() {
        if (accept('-')) return make(Op::Neg, parse_unary());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (accept('^')) return make(Op::Pow, base, parse_unary());  // right associative
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("expected operand", pos_);
        const char c = text_[pos_];

        if (c == '(') {
            ++pos_;
            NodePtr e = parse_sum();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                pos_ = p;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
        }
        const std::string token(text_.substr(start, pos_ - start));
        char* end = nullptr;
        const double v = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size())
            throw ParseError("malformed number '" + token + "'", start);
        auto n = std::make_shared<Node>();
        n->op = Op::Number;
        n->value = v;
        return n;
    }

    NodePtr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "t") return make(Op::Var);
        for (int i = 0; i < kNumFuncs; ++i) {
            if (name == kFuncs[static_cast<std::size_t>(i)].name) {
                if (!accept('(')) throw ParseError("expected '(' after function name", pos_);
                NodePtr arg = parse_sum();
                if (!accept(')')) throw ParseError("expected ')'", pos_);
                auto n = std::make_shared<Node>();
                n->op = Op::Call;
                n->func = i;
                n->a = std::move(arg);
                return n;
            }
        }
        throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
};

}  // namespace detail

Expr parse(std::string_view text) {
    detail::Parser p(text);
    return Expr(p.run());
}

double Expr::eval(double t) const {
    if (!root_) throw EvalError("empty expression");
    return detail::eval_node(*root_, t);
}

std::string Expr::str() const {
    if (!root_) return {};
    std::string out;
    detail::print_node(*root_, out);
    return out;
}

double numeric_derivative(const Expr& e, double t, double step) {
    const double h = step > 0.0 ? step : 1e-6 * std::max(1.0, std::abs(t));
    return (e.eval(t + h) - e.eval(t - h)) / (2.0 * h);
}

}  // namespace swcert::gexpr
