#pragma once

// Rational-function expressions and definition files for ternary systems and
// YB maps.
//
// File layout:
//
//     kind: ternary            # or ybmap
//     params: a1, b1           # first half alpha, second half beta
//     vars: a, b, c            # 3 for ternary, 2 for ybmap
//     quasigroup: additive     # optional
//     mu = (a1*a*(b-c) + b1*c*(a-b)) / (a1*(b-c) + b1*(a-b))
//
// Expressions: + - * / with the usual precedence (left associative), unary
// minus, integer powers x^n and x^-n. A negated base must be parenthesized:
// -x^2 is rejected, write -(x^2) or (-x)^2. Literals are non-negative
// integers. Newlines end a statement except inside parentheses. 0^0 is 1.

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybmap/errors.hpp"
#include "ybmap/field.hpp"
#include "ybmap/objects.hpp"

namespace ybmap {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Op { Const, Sym, Add, Sub, Mul, Div, Neg, Pow };

    Op op = Op::Const;
    std::string text;        // digits for Const, name for Sym
    long long exponent = 0;  // Pow only
    ExprPtr lhs, rhs;        // rhs unused for Neg and Pow

    static ExprPtr constant(std::string digits) { return std::make_shared<Expr>(Expr{Op::Const, std::move(digits), 0, nullptr, nullptr}); }
    static ExprPtr symbol(std::string name) { return std::make_shared<Expr>(Expr{Op::Sym, std::move(name), 0, nullptr, nullptr}); }
    static ExprPtr binary(Op op, ExprPtr l, ExprPtr r) {
        return std::make_shared<Expr>(Expr{op, {}, 0, std::move(l), std::move(r)});
    }
    static ExprPtr neg(ExprPtr e) { return std::make_shared<Expr>(Expr{Op::Neg, {}, 0, std::move(e), nullptr}); }
    static ExprPtr pow(ExprPtr base, long long n) {
        return std::make_shared<Expr>(Expr{Op::Pow, {}, n, std::move(base), nullptr});
    }
};

inline bool same_tree(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    return a->op == b->op && a->text == b->text && a->exponent == b->exponent && same_tree(a->lhs, b->lhs) &&
           same_tree(a->rhs, b->rhs);
}

/// Canonical, fully parenthesized form; parsing it gives back the same tree.
inline std::string print(const ExprPtr& e) {
    switch (e->op) {
        case Expr::Op::Const:
        case Expr::Op::Sym: return e->text;
        case Expr::Op::Add: return "(" + print(e->lhs) + " + " + print(e->rhs) + ")";
        case Expr::Op::Sub: return "(" + print(e->lhs) + " - " + print(e->rhs) + ")";
        case Expr::Op::Mul: return "(" + print(e->lhs) + " * " + print(e->rhs) + ")";
        case Expr::Op::Div: return "(" + print(e->lhs) + " / " + print(e->rhs) + ")";
        case Expr::Op::Neg: return "(-" + print(e->lhs) + ")";
        case Expr::Op::Pow: return "(" + print(e->lhs) + "^" + std::to_string(e->exponent) + ")";
    }
    return "?";
}

inline void collect_symbols(const ExprPtr& e, std::vector<std::string>& out) {
    if (!e) return;
    if (e->op == Expr::Op::Sym) {
        if (std::find(out.begin(), out.end(), e->text) == out.end()) out.push_back(e->text);
        return;
    }
    collect_symbols(e->lhs, out);
    collect_symbols(e->rhs, out);
}

// ---------------------------------------------------------------------------
// Lexer

namespace detail {

struct Token {
    enum class Kind { Number, Ident, Punct, Newline, End };
    Kind kind;
    std::string text;
    std::size_t line, column;
};

inline std::string describe(const Token& t) {
    switch (t.kind) {
        case Token::Kind::End: return "end of input";
        case Token::Kind::Newline: return "end of line";
        default: return "'" + t.text + "'";
    }
}

/// Splits text into tokens; newlines inside parentheses are dropped.
inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, depth = 0;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        i += n;
        col += n;
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            if (depth == 0 && !out.empty() && out.back().kind != Token::Kind::Newline) {
                out.push_back({Token::Kind::Newline, "\n", line, col});
            }
            ++i;
            ++line;
            col = 1;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            advance(1);
        } else if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Kind::Number, std::string(src.substr(i, j - i)), line, col});
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Token::Kind::Ident, std::string(src.substr(i, j - i)), line, col});
            advance(j - i);
        } else if (std::string_view("+-*/^()=:,").find(c) != std::string_view::npos) {
            if (c == '(') ++depth;
            if (c == ')' && depth > 0) --depth;
            out.push_back({Token::Kind::Punct, std::string(1, c), line, col});
            advance(1);
        } else {
            throw ParseError(line, col, {"expression token"}, "'" + std::string(1, c) + "'");
        }
    }
    while (!out.empty() && out.back().kind == Token::Kind::Newline) out.pop_back();
    out.push_back({Token::Kind::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    const Token& peek() const { return t_[pos_]; }
    bool at_punct(char c) const { return peek().kind == Token::Kind::Punct && peek().text[0] == c; }
    bool at(Token::Kind k) const { return peek().kind == k; }
    void advance() { ++pos_; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw ParseError(peek().line, peek().column, std::move(expected), describe(peek()));
    }

    void expect_punct(char c) {
        if (!at_punct(c)) fail({std::string("'") + c + "'"});
        ++pos_;
    }
    std::string expect_ident() {
        if (!at(Token::Kind::Ident)) fail({"identifier"});
        return t_[pos_++].text;
    }
    void expect_newline() {
        if (at(Token::Kind::End)) return;
        if (!at(Token::Kind::Newline)) fail({"end of line"});
        ++pos_;
    }
    void skip_newlines() {
        while (at(Token::Kind::Newline)) ++pos_;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (at_punct('+') || at_punct('-')) {
            const auto op = t_[pos_++].text[0] == '+' ? Expr::Op::Add : Expr::Op::Sub;
            e = Expr::binary(op, e, term());
        }
        return e;
    }

private:
    ExprPtr term() {
        ExprPtr e = factor();
        while (at_punct('*') || at_punct('/')) {
            const auto op = t_[pos_++].text[0] == '*' ? Expr::Op::Mul : Expr::Op::Div;
            e = Expr::binary(op, e, factor());
        }
        return e;
    }

    ExprPtr factor() {
        const bool negated = at_punct('-');
        ExprPtr base = atom();
        if (!at_punct('^')) return base;
        if (negated) fail({"parenthesized base before '^'"});
        ++pos_;
        bool neg_exp = false;
        if (at_punct('-')) {
            neg_exp = true;
            ++pos_;
        }
        if (!at(Token::Kind::Number)) fail({"integer exponent"});
        const std::string digits = t_[pos_].text;
        if (digits.size() > 9) fail({"exponent below 10^9"});
        ++pos_;
        const long long n = std::stoll(digits);
        return Expr::pow(base, neg_exp ? -n : n);
    }

    ExprPtr atom() {
        if (at(Token::Kind::Number)) return Expr::constant(t_[pos_++].text);
        if (at(Token::Kind::Ident)) return Expr::symbol(t_[pos_++].text);
        if (at_punct('(')) {
            ++pos_;
            ExprPtr e = expr();
            expect_punct(')');
            return e;
        }
        if (at_punct('-')) {
            ++pos_;
            return Expr::neg(atom());
        }
        fail({"number", "identifier", "'('", "'-'"});
    }

    std::vector<Token> t_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a single expression (no statement syntax).
inline ExprPtr parse_expression(std::string_view text) {
    detail::Parser p(detail::tokenize(text));
    p.skip_newlines();
    ExprPtr e = p.expr();
    p.skip_newlines();
    if (!p.at(detail::Token::Kind::End)) p.fail({"operator", "end of input"});
    return e;
}

// ---------------------------------------------------------------------------
// Evaluation

template <Field F>
Elem<F> evaluate(const ExprPtr& e, const std::map<std::string, Elem<F>>& bindings, const F& field) {
    switch (e->op) {
        case Expr::Op::Const: return field.parse(e->text);
        case Expr::Op::Sym: {
            auto it = bindings.find(e->text);
            if (it == bindings.end()) throw UnboundSymbol(e->text);
            return it->second;
        }
        case Expr::Op::Add: return evaluate(e->lhs, bindings, field) + evaluate(e->rhs, bindings, field);
        case Expr::Op::Sub: return evaluate(e->lhs, bindings, field) - evaluate(e->rhs, bindings, field);
        case Expr::Op::Mul: return evaluate(e->lhs, bindings, field) * evaluate(e->rhs, bindings, field);
        case Expr::Op::Div: return evaluate(e->lhs, bindings, field) / evaluate(e->rhs, bindings, field);
        case Expr::Op::Neg: return -evaluate(e->lhs, bindings, field);
        case Expr::Op::Pow: return power(field, evaluate(e->lhs, bindings, field), e->exponent);
    }
    throw std::logic_error("bad expression node");
}

/// Evaluator over a fixed slot layout: symbol i of `slots` reads args[i].
/// Constants are converted once.
template <Field F>
using Compiled = std::function<Elem<F>(const std::vector<Elem<F>>& args)>;

template <Field F>
Compiled<F> compile(const ExprPtr& e, const std::vector<std::string>& slots, const F& field) {
    using E = Elem<F>;
    using Args = std::vector<E>;
    switch (e->op) {
        case Expr::Op::Const: {
            E c = field.parse(e->text);
            return [c](const Args&) { return c; };
        }
        case Expr::Op::Sym: {
            auto it = std::find(slots.begin(), slots.end(), e->text);
            if (it == slots.end()) throw UndeclaredSymbol(e->text);
            const auto i = static_cast<std::size_t>(it - slots.begin());
            return [i](const Args& a) { return a[i]; };
        }
        case Expr::Op::Neg: {
            auto f = compile(e->lhs, slots, field);
            return [f](const Args& a) { return -f(a); };
        }
        case Expr::Op::Pow: {
            auto f = compile(e->lhs, slots, field);
            const long long n = e->exponent;
            return [f, n, field](const Args& a) { return power(field, f(a), n); };
        }
        default: break;
    }
    auto l = compile(e->lhs, slots, field);
    auto r = compile(e->rhs, slots, field);
    switch (e->op) {
        case Expr::Op::Add: return [l, r](const Args& a) { return l(a) + r(a); };
        case Expr::Op::Sub: return [l, r](const Args& a) { return l(a) - r(a); };
        case Expr::Op::Mul: return [l, r](const Args& a) { return l(a) * r(a); };
        default: return [l, r](const Args& a) { return l(a) / r(a); };
    }
}

// ---------------------------------------------------------------------------
// Definition files

struct DefinitionFile {
    enum class Kind { Ternary, YBMap };

    Kind kind = Kind::Ternary;
    std::vector<std::string> param_names;
    std::vector<std::string> var_names;
    std::map<std::string, ExprPtr> bodies;
    std::optional<std::string> quasigroup;

    std::size_t param_arity() const { return param_names.size() / 2; }
};

namespace detail {

inline std::vector<std::string> name_list(Parser& p) {
    std::vector<std::string> names;
    if (p.at(Token::Kind::Newline) || p.at(Token::Kind::End)) return names;
    names.push_back(p.expect_ident());
    while (p.at_punct(',')) {
        p.expect_punct(',');
        names.push_back(p.expect_ident());
    }
    return names;
}

inline void header_key(Parser& p, const std::string& key) {
    if (!p.at(Token::Kind::Ident) || p.peek().text != key) p.fail({"'" + key + ":'"});
    p.expect_ident();
    p.expect_punct(':');
}

}  // namespace detail

inline DefinitionFile parse_definition(std::string_view text) {
    using detail::Token;
    detail::Parser p(detail::tokenize(text));
    DefinitionFile def;
    p.skip_newlines();

    detail::header_key(p, "kind");
    const Token kind_tok = p.peek();
    const std::string kind = p.expect_ident();
    if (kind == "ternary") {
        def.kind = DefinitionFile::Kind::Ternary;
    } else if (kind == "ybmap") {
        def.kind = DefinitionFile::Kind::YBMap;
    } else {
        throw ParseError(kind_tok.line, kind_tok.column, {"ternary", "ybmap"}, "'" + kind + "'");
    }
    p.expect_newline();

    detail::header_key(p, "params");
    def.param_names = detail::name_list(p);
    p.expect_newline();
    detail::header_key(p, "vars");
    const Token vars_tok = p.peek();
    def.var_names = detail::name_list(p);
    p.expect_newline();
    p.skip_newlines();

    if (p.at(Token::Kind::Ident) && p.peek().text == "quasigroup") {
        detail::header_key(p, "quasigroup");
        std::string q = p.expect_ident();
        if (p.at_punct('(')) {
            p.expect_punct('(');
            if (!p.at(Token::Kind::Number)) p.fail({"number"});
            q += "(" + p.peek().text + ")";
            p.advance();
            p.expect_punct(')');
        }
        def.quasigroup = q;
        p.expect_newline();
    }

    if (def.param_names.size() % 2 != 0) {
        throw ArityMismatch("params must split evenly into alpha and beta, got " +
                            std::to_string(def.param_names.size()));
    }
    const std::size_t want_vars = def.kind == DefinitionFile::Kind::Ternary ? 3 : 2;
    if (def.var_names.size() != want_vars) {
        throw ArityMismatch(std::string(def.kind == DefinitionFile::Kind::Ternary ? "ternary" : "ybmap") +
                            " files declare " + std::to_string(want_vars) + " vars, got " +
                            std::to_string(def.var_names.size()) + " at line " + std::to_string(vars_tok.line));
    }
    std::vector<std::string> declared = def.param_names;
    declared.insert(declared.end(), def.var_names.begin(), def.var_names.end());
    for (std::size_t i = 0; i < declared.size(); ++i) {
        for (std::size_t j = i + 1; j < declared.size(); ++j) {
            if (declared[i] == declared[j]) throw ArityMismatch("symbol '" + declared[i] + "' declared twice");
        }
    }

    const std::vector<std::string> wanted =
        def.kind == DefinitionFile::Kind::Ternary ? std::vector<std::string>{"mu"} : std::vector<std::string>{"u", "v"};
    p.skip_newlines();
    while (!p.at(Token::Kind::End)) {
        const Token name_tok = p.peek();
        const std::string name = p.expect_ident();
        if (std::find(wanted.begin(), wanted.end(), name) == wanted.end() || def.bodies.count(name)) {
            std::vector<std::string> open;
            for (const auto& w : wanted) {
                if (!def.bodies.count(w)) open.push_back("'" + w + "'");
            }
            throw ParseError(name_tok.line, name_tok.column, open, "'" + name + "'");
        }
        p.expect_punct('=');
        ExprPtr body = p.expr();
        p.expect_newline();
        p.skip_newlines();
        std::vector<std::string> used;
        collect_symbols(body, used);
        for (const auto& s : used) {
            if (std::find(declared.begin(), declared.end(), s) == declared.end()) throw UndeclaredSymbol(s);
        }
        def.bodies[name] = body;
    }
    for (const auto& w : wanted) {
        if (!def.bodies.count(w)) p.fail({"'" + w + " ='"});
    }
    return def;
}

namespace detail {

template <Field F>
std::vector<Elem<F>> slot_args(const Params<F>& a, const Params<F>& b, std::initializer_list<const Point<F>*> pts) {
    std::vector<Elem<F>> args;
    args.reserve(a.size() + b.size() + pts.size());
    args.insert(args.end(), a.begin(), a.end());
    args.insert(args.end(), b.begin(), b.end());
    for (const Point<F>* p : pts) args.push_back((*p)[0]);
    return args;
}

inline std::vector<std::string> slots_of(const DefinitionFile& def) {
    std::vector<std::string> s = def.param_names;
    s.insert(s.end(), def.var_names.begin(), def.var_names.end());
    return s;
}

inline unsigned expr_degree(const ExprPtr& e) {
    switch (e->op) {
        case Expr::Op::Const: return 0;
        case Expr::Op::Sym: return 1;
        case Expr::Op::Neg: return expr_degree(e->lhs);
        case Expr::Op::Pow: {
            const long long n = e->exponent < 0 ? -e->exponent : e->exponent;
            return static_cast<unsigned>(std::min<long long>(1 << 20, n * expr_degree(e->lhs)));
        }
        default: return expr_degree(e->lhs) + expr_degree(e->rhs);
    }
}

}  // namespace detail

/// Scalar ternary system from a `kind: ternary` definition.
template <Field F>
Ternary<F> to_ternary(const DefinitionFile& def, const F& field, std::string name) {
    if (def.kind != DefinitionFile::Kind::Ternary) throw ArityMismatch("definition is not a ternary system");
    auto mu = compile(def.bodies.at("mu"), detail::slots_of(def), field);
    const std::size_t k = def.param_arity();
    Ternary<F> t;
    t.name = std::move(name);
    t.carrier = def.quasigroup && (*def.quasigroup == "multiplicative" || *def.quasigroup == "division")
                    ? Carrier::nonzero()
                    : Carrier::scalars();
    t.param_arity = k;
    t.source = "dsl";
    t.degree = std::max(1u, 2 * detail::expr_degree(def.bodies.at("mu")));
    t.eval = [mu, k](const Params<F>& al, const Params<F>& be, const Point<F>& a, const Point<F>& b,
                     const Point<F>& c) {
        if (al.size() != k || be.size() != k) throw ArityMismatch("ternary expects " + std::to_string(k) + " params");
        return Point<F>{mu(detail::slot_args<F>(al, be, {&a, &b, &c}))};
    };
    return t;
}

/// Scalar YB map from a `kind: ybmap` definition.
template <Field F>
YBMap<F> to_ybmap(const DefinitionFile& def, const F& field, std::string name) {
    if (def.kind != DefinitionFile::Kind::YBMap) throw ArityMismatch("definition is not a YB map");
    const auto slots = detail::slots_of(def);
    auto u = compile(def.bodies.at("u"), slots, field);
    auto v = compile(def.bodies.at("v"), slots, field);
    const std::size_t k = def.param_arity();
    YBMap<F> r;
    r.name = std::move(name);
    r.carrier = def.quasigroup && (*def.quasigroup == "multiplicative" || *def.quasigroup == "division")
                    ? Carrier::nonzero()
                    : Carrier::scalars();
    r.param_arity = k;
    r.source = "dsl";
    r.degree = std::max(1u, 2 * std::max(detail::expr_degree(def.bodies.at("u")),
                                         detail::expr_degree(def.bodies.at("v"))));
    r.eval = [u, v, k](const Point<F>& x, const Params<F>& a, const Point<F>& y, const Params<F>& b) {
        if (a.size() != k || b.size() != k) throw ArityMismatch("map expects " + std::to_string(k) + " params");
        const auto args = detail::slot_args<F>(a, b, {&x, &y});
        return PointPair<F>{{u(args)}, {v(args)}};
    };
    return r;
}

}  // namespace ybmap
