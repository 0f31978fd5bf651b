#pragma once

// Reduction of n-dimensional YB maps through a compatible constraint
// x_k = f_a(other coordinates), the matching Lax reduction, parameter
// reindexing, and the two-dimensional "Case I" map with its binomial Lax
// matrix.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ybmap/construct.hpp"
#include "ybmap/engine.hpp"
#include "ybmap/expr.hpp"
#include "ybmap/lax.hpp"
#include "ybmap/matrix.hpp"
#include "ybmap/objects.hpp"

namespace ybmap {

/// x_k = f_a(x_1, ..., x_{k-1}, x_{k+1}, ..., x_n) with k 1-based.
template <Field F>
struct Constraint {
    using Eval = std::function<Elem<F>(const Params<F>& alpha, const Point<F>& free)>;

    std::string name;
    std::size_t index = 1;
    std::size_t arity = 1;  // n - 1
    Eval eval;

    Elem<F> operator()(const Params<F>& alpha, const Point<F>& free) const { return eval(alpha, free); }
};

template <Field F>
Constraint<F> zero_constraint(const F& field, std::size_t n, std::size_t k) {
    const Elem<F> z = field.zero();
    return {"zero", k, n - 1, [z](const Params<F>&, const Point<F>&) { return z; }};
}

template <Field F>
Constraint<F> constant_constraint(const F& field, const std::string& literal, std::size_t n, std::size_t k) {
    const Elem<F> c = field.parse(literal);
    return {"constant:" + literal, k, n - 1, [c](const Params<F>&, const Point<F>&) { return c; }};
}

/// DSL expression in x1..x{n-1} (the free coordinates in order) and a1..a{m}
/// (the parameter vector).
template <Field F>
Constraint<F> expr_constraint(const F& field, const std::string& text, std::size_t n, std::size_t k,
                              std::size_t param_arity) {
    std::vector<std::string> slots;
    for (std::size_t i = 1; i <= param_arity; ++i) slots.push_back("a" + std::to_string(i));
    for (std::size_t i = 1; i < n; ++i) slots.push_back("x" + std::to_string(i));
    auto f = compile(parse_expression(text), slots, field);
    return {"expr:" + text, k, n - 1, [f](const Params<F>& a, const Point<F>& free) {
                std::vector<Elem<F>> args(a.begin(), a.end());
                args.insert(args.end(), free.begin(), free.end());
                return f(args);
            }};
}

/// Parses "zero", "constant:<literal>" or "expr:<expression>".
template <Field F>
Constraint<F> parse_constraint(const F& field, const std::string& spec, std::size_t n, std::size_t k,
                               std::size_t param_arity) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("constraint index " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    if (spec == "zero") return zero_constraint(field, n, k);
    if (spec.rfind("constant:", 0) == 0) return constant_constraint(field, spec.substr(9), n, k);
    if (spec.rfind("expr:", 0) == 0) return expr_constraint(field, spec.substr(5), n, k, param_arity);
    throw std::invalid_argument("constraint must be zero, constant:<c> or expr:<e>, got '" + spec + "'");
}

namespace detail {

template <Field F>
Point<F> insert_at(const Point<F>& free, std::size_t k, const Elem<F>& value) {
    Point<F> p = free;
    p.insert(p.begin() + static_cast<std::ptrdiff_t>(k - 1), value);
    return p;
}

template <Field F>
Point<F> remove_at(const Point<F>& p, std::size_t k) {
    Point<F> out = p;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(k - 1));
    return out;
}

template <Field F>
void check_constraint_shape(std::size_t dim, const Constraint<F>& f, const std::string& what) {
    if (dim < 2 || f.arity + 1 != dim || f.index < 1 || f.index > dim) {
        throw IncompatibleStructure("constraint '" + f.name + "' does not fit " + what + " of dimension " +
                                    std::to_string(dim));
    }
}

template <Field F>
Carrier reduced_carrier(const Carrier& c) {
    Carrier out = c;
    out.dim = c.dim - 1;
    return out;
}

}  // namespace detail

/// u_k = f_a(u without k) and v_k = f_b(v without k) whenever x, y obey the constraint.
template <Field F>
VerificationReport check_compatibility(const YBMap<F>& r, const Constraint<F>& f, const Context<F>& ctx) {
    detail::check_constraint_shape(r.carrier.dim, f, "map '" + r.name + "'");
    if (r.carrier.kind == Carrier::Kind::InvertibleMatrices) {
        throw IncompatibleStructure("constraints apply to coordinate carriers, not matrices");
    }
    const Carrier free = detail::reduced_carrier<F>(r.carrier);
    const std::size_t k = f.index;
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Point<F> xf = sample_point(s, free), yf = sample_point(s, free);
        Params<F> a = sample_params(s, r.param_arity), b = sample_params(s, r.param_arity);
        Point<F> x = detail::insert_at<F>(xf, k, f(a, xf));
        Point<F> y = detail::insert_at<F>(yf, k, f(b, yf));
        auto [u, v] = r(x, a, y, b);
        const Elem<F> fu = f(a, detail::remove_at<F>(u, k));
        const Elem<F> fv = f(b, detail::remove_at<F>(v, k));
        if (u[k - 1] == fu && v[k - 1] == fv) return std::nullopt;
        return Witness{detail::join_points<F>({{"x", &x}, {"y", &y}, {"alpha", &a}, {"beta", &b}}),
                       "u_k=" + u[k - 1].to_string() + ", v_k=" + v[k - 1].to_string(),
                       "f_alpha(u)=" + fu.to_string() + ", f_beta(v)=" + fv.to_string()};
    };
    return run_trials(ctx, "constraint_compatibility", r.name + " | " + f.name + " @" + std::to_string(k), r.degree,
                      trial);
}

/// Fills coordinate k with f and drops it from the image.
template <Field F>
Constructed<YBMap<F>> reduce_map(const YBMap<F>& r, const Constraint<F>& f, const Context<F>& ctx,
                                 ConstructOptions opts = {}) {
    detail::check_constraint_shape(r.carrier.dim, f, "map '" + r.name + "'");
    std::vector<VerificationReport> pre;
    if (opts.strict) pre.push_back(check_compatibility(r, f, ctx));
    const std::size_t k = f.index;
    auto eval = r.eval;
    auto fe = f.eval;
    YBMap<F> out;
    out.name = "reduced(" + r.name + ", " + f.name + " @" + std::to_string(k) + ")";
    out.carrier = detail::reduced_carrier<F>(r.carrier);
    out.param_arity = r.param_arity;
    out.source = "reduced";
    out.degree = r.degree;
    out.note = "map " + r.name + " restricted to x_" + std::to_string(k) + " = f(other coordinates)";
    out.eval = [eval, fe, k](const Point<F>& x, const Params<F>& a, const Point<F>& y, const Params<F>& b) {
        auto [u, v] = eval(detail::insert_at<F>(x, k, fe(a, x)), a, detail::insert_at<F>(y, k, fe(b, y)), b);
        return PointPair<F>{detail::remove_at<F>(u, k), detail::remove_at<F>(v, k)};
    };
    return detail::finish(std::move(out), "reduce(" + r.name + ")", std::move(pre), opts);
}

/// L~(x; a) = L(x with f_a(x) inserted at k; a). Strict mode checks `r`'s compatibility.
template <Field F>
Constructed<LaxMatrix<F>> reduce_lax(const LaxMatrix<F>& L, const YBMap<F>& r, const Constraint<F>& f,
                                     const Context<F>& ctx, ConstructOptions opts = {}) {
    detail::check_constraint_shape(L.dim, f, "Lax matrix '" + L.name + "'");
    std::vector<VerificationReport> pre;
    if (opts.strict) pre.push_back(check_compatibility(r, f, ctx));
    const std::size_t k = f.index;
    auto eval = L.eval;
    auto fe = f.eval;
    LaxMatrix<F> out = L;
    out.name = "reduced(" + L.name + ", " + f.name + " @" + std::to_string(k) + ")";
    out.dim = L.dim - 1;
    out.eval = [eval, fe, k](const Point<F>& x, const Params<F>& a, const Elem<F>& z) {
        return eval(detail::insert_at<F>(x, k, fe(a, x)), a, z);
    };
    return detail::finish(std::move(out), "reduce(" + L.name + ")", std::move(pre), opts);
}

// ---------------------------------------------------------------------------
// Parameter reindexing

/// Maps the new parameter vector to the one the wrapped object expects.
template <Field F>
struct Reparametrization {
    std::string name;
    std::size_t arity = 1;  // new arity
    std::function<Params<F>(const Params<F>&)> apply;
    std::string note;
};

/// a -> (a - r, a + r). r is a fixed constant of the family, not a YB parameter.
template <Field F>
Reparametrization<F> homotopy_reparametrization(const F& field, std::int64_t r) {
    const Elem<F> rr = field.from_int(r);
    return {"homotopy(r=" + std::to_string(r) + ")", 1,
            [rr](const Params<F>& a) { return Params<F>{a[0] - rr, a[0] + rr}; },
            "a -> (a - r, a + r) with r = " + std::to_string(r) + "; r is a fixed constant, not a YB parameter"};
}

/// Pins slot `slot` (0-based) of both parameter vectors to a constant c.
template <Field F>
Reparametrization<F> pin_parameter(const F& field, std::size_t old_arity, std::size_t slot, const std::string& c) {
    const Elem<F> v = field.parse(c);
    return {"pin(" + std::to_string(slot + 1) + "=" + c + ")", old_arity - 1,
            [v, slot](const Params<F>& a) {
                Params<F> out = a;
                out.insert(out.begin() + static_cast<std::ptrdiff_t>(slot), v);
                return out;
            },
            "parameter " + std::to_string(slot + 1) + " fixed to " + c};
}

template <Field F>
YBMap<F> reparametrize(const YBMap<F>& r, const Reparametrization<F>& g, std::string name) {
    auto eval = r.eval;
    auto ap = g.apply;
    YBMap<F> out = r;
    out.name = std::move(name);
    out.param_arity = g.arity;
    out.note = g.note;
    out.eval = [eval, ap](const Point<F>& x, const Params<F>& a, const Point<F>& y, const Params<F>& b) {
        return eval(x, ap(a), y, ap(b));
    };
    return out;
}

template <Field F>
LaxMatrix<F> reparametrize(const LaxMatrix<F>& L, const Reparametrization<F>& g, std::string name) {
    auto eval = L.eval;
    auto ap = g.apply;
    LaxMatrix<F> out = L;
    out.name = std::move(name);
    out.param_arity = g.arity;
    out.note = g.note;
    out.eval = [eval, ap](const Point<F>& x, const Params<F>& a, const Elem<F>& z) { return eval(x, ap(a), z); };
    return out;
}

template <Field F>
Ternary<F> reparametrize(const Ternary<F>& t, const Reparametrization<F>& g, std::string name) {
    auto eval = t.eval;
    auto ap = g.apply;
    Ternary<F> out = t;
    out.name = std::move(name);
    out.param_arity = g.arity;
    out.note = g.note;
    out.eval = [eval, ap](const Params<F>& al, const Params<F>& be, const Point<F>& a, const Point<F>& b,
                          const Point<F>& c) { return eval(ap(al), ap(be), a, b, c); };
    return out;
}

// ---------------------------------------------------------------------------
// Case I map on X^2 x X^2

namespace detail {

template <Field F>
SquareMatrix<Elem<F>> case_one_lbar(const Point<F>& x, const Params<F>& a) {
    using E = Elem<F>;
    const E& x1 = x[0];
    const E& x2 = x[1];
    return SquareMatrix<E>{{x1, x2}, {(a[0] - a[1] * x1 * x1) / (a[0] * x2), -(a[1] * x1) / a[0]}};
}

}  // namespace detail

/// ((x1, x2), (y1, y2)) -> ((U11, U12), (V11, V12)) with
/// U = (Lb(y;b) Lb(x;a) + K_a K_b / (a1 a2)) (Lb(y;b) K_a + K_b Lb(x;a))^-1 K_a,
/// V = K_a^-1 (Lb(y;b) K_a + K_b Lb(x;a) - U K_b), K_a = diag(a1, a2).
template <Field F>
YBMap<F> case_one_map(const F& field) {
    YBMap<F> r;
    r.name = "case1_map";
    r.carrier = Carrier::scalars(2);
    r.param_arity = 2;
    r.degree = 48;
    r.note = "two-dimensional map from a binomial Lax matrix with K_a = diag(a1, a2)";
    r.eval = [field](const Point<F>& x, const Params<F>& a, const Point<F>& y, const Params<F>& b) {
        using M = SquareMatrix<Elem<F>>;
        const M ka = M::diagonal(a), kb = M::diagonal(b);
        const M lx = detail::case_one_lbar<F>(x, a), ly = detail::case_one_lbar<F>(y, b);
        const M s = ly * ka + kb * lx;
        const M u = (ly * lx + (ka * kb).scale(field.one() / (a[0] * a[1]))) * s.inverse() * ka;
        const M v = ka.inverse() * (s - u * kb);
        return PointPair<F>{{u(0, 0), u(0, 1)}, {v(0, 0), v(0, 1)}};
    };
    return r;
}

/// Lb(x1, x2; a) - zeta K_a.
template <Field F>
LaxMatrix<F> case_one_lax(const F& field) {
    (void)field;
    LaxMatrix<F> L;
    L.name = "case1_lax";
    L.dim = 2;
    L.param_arity = 2;
    L.degree = 1;
    L.note = "binomial Lax matrix of case1_map";
    L.eval = [](const Point<F>& x, const Params<F>& a, const Elem<F>& z) {
        using M = SquareMatrix<Elem<F>>;
        return detail::case_one_lbar<F>(x, a) - M::diagonal(a).scale(z);
    };
    return L;
}

}  // namespace ybmap
