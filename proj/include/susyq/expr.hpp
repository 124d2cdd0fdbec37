// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "susyq/common.hpp"

namespace susyq {

// Scalar expressions in the variables x, y, z.
//
// Grammar (ascending precedence: + - < * / < unary - < ^, with ^ right
// associative and its exponent parsed at unary level so "x^-2" is legal):
//
//   expr     := additive
//   additive := multiplicative (('+' | '-') multiplicative)*
//   multipl  := unary (('*' | '/') unary)*
//   unary    := '-' unary | power
//   power    := primary ('^' unary)?
//   primary  := number | 'x' | 'y' | 'z' | param | func '(' expr ')' | '(' expr ')'
//
// Named parameters are substituted as numeric constants at parse time, so an
// Expr is always closed over {x, y, z}.

enum class UnaryOp { Neg, Sin, Cos, Exp, Ln, Sqrt, Abs };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

class Expr {
  public:
    enum class Kind { Constant, Variable, Unary, Binary };

    Expr() : kind_(Kind::Constant), value_(0.0) {}

    static Expr constant(double v) {
        Expr e;
        e.kind_ = Kind::Constant;
        e.value_ = v;
        return e;
    }

    static Expr variable(Axis a) {
        Expr e;
        e.kind_ = Kind::Variable;
        e.var_ = a;
        return e;
    }

    static Expr unary(UnaryOp op, Expr child) {
        Expr e;
        e.kind_ = Kind::Unary;
        e.uop_ = op;
        e.children_.push_back(std::move(child));
        return e;
    }

    static Expr binary(BinaryOp op, Expr lhs, Expr rhs) {
        Expr e;
        e.kind_ = Kind::Binary;
        e.bop_ = op;
        e.children_.push_back(std::move(lhs));
        e.children_.push_back(std::move(rhs));
        return e;
    }

    Kind kind() const { return kind_; }
    double value() const { return value_; }
    Axis var() const { return var_; }
    UnaryOp unary_op() const { return uop_; }
    BinaryOp binary_op() const { return bop_; }
    const Expr& child(std::size_t i) const { return children_[i]; }
    std::size_t child_count() const { return children_.size(); }

    bool structurally_equal(const Expr& o) const {
        if (kind_ != o.kind_ || children_.size() != o.children_.size()) return false;
        switch (kind_) {
            case Kind::Constant:
                if (value_ != o.value_ || std::signbit(value_) != std::signbit(o.value_))
                    return false;
                break;
            case Kind::Variable:
                if (var_ != o.var_) return false;
                break;
            case Kind::Unary:
                if (uop_ != o.uop_) return false;
                break;
            case Kind::Binary:
                if (bop_ != o.bop_) return false;
                break;
        }
        for (std::size_t i = 0; i < children_.size(); ++i)
            if (!children_[i].structurally_equal(o.children_[i])) return false;
        return true;
    }

  private:
    Kind kind_;
    double value_ = 0.0;
    Axis var_ = Axis::X;
    UnaryOp uop_ = UnaryOp::Neg;
    BinaryOp bop_ = BinaryOp::Add;
    std::vector<Expr> children_;
};

namespace detail {

inline const char* unary_name(UnaryOp op) {
    switch (op) {
        case UnaryOp::Neg: return "-";
        case UnaryOp::Sin: return "sin";
        case UnaryOp::Cos: return "cos";
        case UnaryOp::Exp: return "exp";
        case UnaryOp::Ln: return "ln";
        case UnaryOp::Sqrt: return "sqrt";
        case UnaryOp::Abs: return "abs";
    }
    return "?";
}

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Precedence used by both parser and printer. Negative constants print with a
// leading '-', so they bind like a unary minus.
inline int print_precedence(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Binary:
            switch (e.binary_op()) {
                case BinaryOp::Add:
                case BinaryOp::Sub: return 1;
                case BinaryOp::Mul:
                case BinaryOp::Div: return 2;
                case BinaryOp::Pow: return 4;
            }
            return 1;
        case Expr::Kind::Unary:
            return e.unary_op() == UnaryOp::Neg ? 3 : 5;
        case Expr::Kind::Constant:
            return std::signbit(e.value()) ? 3 : 5;
        case Expr::Kind::Variable:
            return 5;
    }
    return 5;
}

inline void print_expr(const Expr& e, std::string& out) {
    auto child_str = [](const Expr& c, bool parens) {
        std::string s;
        print_expr(c, s);
        return parens ? "(" + s + ")" : s;
    };
    switch (e.kind()) {
        case Expr::Kind::Constant:
            out += format_double(e.value());
            return;
        case Expr::Kind::Variable:
            out += axis_name(e.var());
            return;
        case Expr::Kind::Unary: {
            const Expr& c = e.child(0);
            if (e.unary_op() == UnaryOp::Neg) {
                out += '-';
                out += child_str(c, print_precedence(c) < 3);
            } else {
                out += unary_name(e.unary_op());
                out += child_str(c, true);
            }
            return;
        }
        case Expr::Kind::Binary: {
            const Expr& l = e.child(0);
            const Expr& r = e.child(1);
            int p = print_precedence(e);
            // Right children at equal precedence keep their parentheses so
            // the reparse rebuilds the same left-leaning shape.
            switch (e.binary_op()) {
                case BinaryOp::Add:
                    out += child_str(l, print_precedence(l) < p);
                    out += " + ";
                    out += child_str(r, print_precedence(r) <= p);
                    return;
                case BinaryOp::Sub:
                    out += child_str(l, print_precedence(l) < p);
                    out += " - ";
                    out += child_str(r, print_precedence(r) <= p);
                    return;
                case BinaryOp::Mul:
                    out += child_str(l, print_precedence(l) < p);
                    out += "*";
                    out += child_str(r, print_precedence(r) <= p);
                    return;
                case BinaryOp::Div:
                    out += child_str(l, print_precedence(l) < p);
                    out += "/";
                    out += child_str(r, print_precedence(r) <= p);
                    return;
                case BinaryOp::Pow:
                    // Base must be atomic; the exponent reparses at unary level.
                    out += child_str(l, print_precedence(l) < 5);
                    out += "^";
                    out += child_str(r, print_precedence(r) < 3);
                    return;
            }
        }
    }
}

}  // namespace detail

inline std::string to_string(const Expr& e) {
    std::string out;
    detail::print_expr(e, out);
    return out;
}

/// Evaluates at a point. Throws DomainError when the point leaves the domain
/// of a subexpression or a value fails to be finite.
inline double evaluate(const Expr& e, const std::array<double, 3>& point) {
    auto fail = [&e](const std::string& what) -> double {
        throw DomainError(what + " in '" + to_string(e) + "'");
    };
    switch (e.kind()) {
        case Expr::Kind::Constant:
            return e.value();
        case Expr::Kind::Variable:
            return point[static_cast<int>(e.var())];
        case Expr::Kind::Unary: {
            double v = evaluate(e.child(0), point);
            double r = 0.0;
            switch (e.unary_op()) {
                case UnaryOp::Neg: return -v;
                case UnaryOp::Sin: r = std::sin(v); break;
                case UnaryOp::Cos: r = std::cos(v); break;
                case UnaryOp::Exp: r = std::exp(v); break;
                case UnaryOp::Ln:
                    if (v <= 0.0) return fail("ln of non-positive value " + detail::format_double(v));
                    r = std::log(v);
                    break;
                case UnaryOp::Sqrt:
                    if (v < 0.0) return fail("sqrt of negative value " + detail::format_double(v));
                    r = std::sqrt(v);
                    break;
                case UnaryOp::Abs: return std::fabs(v);
            }
            if (!std::isfinite(r)) return fail("non-finite result");
            return r;
        }
        case Expr::Kind::Binary: {
            double a = evaluate(e.child(0), point);
            double b = evaluate(e.child(1), point);
            double r = 0.0;
            switch (e.binary_op()) {
                case BinaryOp::Add: r = a + b; break;
                case BinaryOp::Sub: r = a - b; break;
                case BinaryOp::Mul: r = a * b; break;
                case BinaryOp::Div:
                    if (b == 0.0) return fail("division by zero");
                    r = a / b;
                    break;
                case BinaryOp::Pow: {
                    // Integer exponents go through repeated multiplication so
                    // that reflections of x^2 stay bit-exact and negative
                    // bases stay real.
                    if (b == std::nearbyint(b) && std::fabs(b) <= 1e9) {
                        long long n = static_cast<long long>(b);
                        if (n < 0 && a == 0.0) return fail("zero raised to a negative power");
                        unsigned long long m = n < 0 ? static_cast<unsigned long long>(-n)
                                                     : static_cast<unsigned long long>(n);
                        double acc = 1.0;
                        double base = a;
                        while (m != 0) {
                            if (m & 1ULL) acc *= base;
                            base *= base;
                            m >>= 1;
                        }
                        r = n < 0 ? 1.0 / acc : acc;
                    } else {
                        if (a <= 0.0)
                            return fail("non-integer power of non-positive base " +
                                        detail::format_double(a));
                        r = std::pow(a, b);
                    }
                    break;
                }
            }
            if (!std::isfinite(r)) return fail("non-finite result");
            return r;
        }
    }
    return fail("malformed node");
}

namespace detail {

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    std::size_t offset;
    double number = 0.0;
    std::string_view text;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
        current_.offset = pos_;
        if (pos_ >= text_.size()) {
            current_.type = Token::Type::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': current_.type = Token::Type::Plus; ++pos_; return;
            case '-': current_.type = Token::Type::Minus; ++pos_; return;
            case '*': current_.type = Token::Type::Star; ++pos_; return;
            case '/': current_.type = Token::Type::Slash; ++pos_; return;
            case '^': current_.type = Token::Type::Caret; ++pos_; return;
            case '(': current_.type = Token::Type::LParen; ++pos_; return;
            case ')': current_.type = Token::Type::RParen; ++pos_; return;
            default: break;
        }
        if ((c >= '0' && c <= '9') || c == '.') {
            lex_number();
            return;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                    (text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
                    (text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '_'))
                ++pos_;
            current_.type = Token::Type::Ident;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    void lex_number() {
        std::size_t start = pos_;
        bool digits = false;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            ++pos_;
            digits = true;
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
                ++pos_;
                digits = true;
            }
        }
        if (!digits) throw ParseError(start, "malformed numeric literal");
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
                while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
            } else {
                pos_ = mark;  // "2e" is the number 2 followed by identifier "e"
            }
        }
        double value = 0.0;
        auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc{})
            throw ParseError(start, "malformed numeric literal");
        current_.type = Token::Type::Number;
        current_.number = value;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
  public:
    Parser(std::string_view text, const std::map<std::string, double>& params)
        : lexer_(text), params_(params) {}

    Expr parse() {
        Expr e = additive();
        const Token& t = lexer_.peek();
        if (t.type != Token::Type::End)
            throw ParseError(t.offset, "unexpected trailing input");
        return e;
    }

  private:
    using TT = Token::Type;

    Expr additive() {
        Expr lhs = multiplicative();
        while (lexer_.peek().type == TT::Plus || lexer_.peek().type == TT::Minus) {
            BinaryOp op = lexer_.take().type == TT::Plus ? BinaryOp::Add : BinaryOp::Sub;
            lhs = Expr::binary(op, std::move(lhs), multiplicative());
        }
        return lhs;
    }

    Expr multiplicative() {
        Expr lhs = unary();
        while (lexer_.peek().type == TT::Star || lexer_.peek().type == TT::Slash) {
            BinaryOp op = lexer_.take().type == TT::Star ? BinaryOp::Mul : BinaryOp::Div;
            lhs = Expr::binary(op, std::move(lhs), unary());
        }
        return lhs;
    }

    Expr unary() {
        if (lexer_.peek().type == TT::Minus) {
            lexer_.take();
            Expr c = unary();
            // Fold a negated literal into a negative constant so printing and
            // reparsing agree node for node.
            if (c.kind() == Expr::Kind::Constant) return Expr::constant(-c.value());
            return Expr::unary(UnaryOp::Neg, std::move(c));
        }
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (lexer_.peek().type == TT::Caret) {
            lexer_.take();
            return Expr::binary(BinaryOp::Pow, std::move(base), unary());
        }
        return base;
    }

    Expr primary() {
        Token t = lexer_.take();
        switch (t.type) {
            case TT::Number:
                return Expr::constant(t.number);
            case TT::LParen: {
                Expr e = additive();
                expect(TT::RParen, "expected ')'");
                return e;
            }
            case TT::Ident:
                return identifier(t);
            default:
                throw ParseError(t.offset,
                                 "expected a number, identifier, function call or '('");
        }
    }

    Expr identifier(const Token& t) {
        if (lexer_.peek().type == TT::LParen) {
            UnaryOp op;
            if (t.text == "sin") op = UnaryOp::Sin;
            else if (t.text == "cos") op = UnaryOp::Cos;
            else if (t.text == "exp") op = UnaryOp::Exp;
            else if (t.text == "ln") op = UnaryOp::Ln;
            else if (t.text == "sqrt") op = UnaryOp::Sqrt;
            else if (t.text == "abs") op = UnaryOp::Abs;
            else throw ParseError(t.offset, "unknown function '" + std::string(t.text) + "'");
            lexer_.take();
            Expr arg = additive();
            expect(TT::RParen, "expected ')' closing function argument");
            return Expr::unary(op, std::move(arg));
        }
        if (t.text == "x") return Expr::variable(Axis::X);
        if (t.text == "y") return Expr::variable(Axis::Y);
        if (t.text == "z") return Expr::variable(Axis::Z);
        auto it = params_.find(std::string(t.text));
        if (it != params_.end()) return Expr::constant(it->second);
        throw ParseError(t.offset, "unknown identifier '" + std::string(t.text) + "'");
    }

    void expect(TT type, const char* what) {
        const Token& t = lexer_.peek();
        if (t.type != type) throw ParseError(t.offset, what);
        lexer_.take();
    }

    Lexer lexer_;
    const std::map<std::string, double>& params_;
};

}  // namespace detail

/// Parses expression text. Identifiers other than x, y, z must appear in
/// `params` and are substituted as constants.
inline Expr parse_expression(std::string_view text,
                             const std::map<std::string, double>& params = {}) {
    return detail::Parser(text, params).parse();
}

}  // namespace susyq
