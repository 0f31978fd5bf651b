#pragma once

// Two-way bridge between 3D compatible ternary systems and YB maps:
//
//  * ternary -> YB map under a symmetry condition: R(x, y) = T(e_l, x, x*y) with
//    T(a, b, c) = (mu(a,b,c) \ c, a \ mu(a,b,c)) in a working quasigroup;
//  * ternary -> dynamical YB map on any left quasigroup (lambda-dependent);
//  * YB map with the invariance v*u = x*y -> ternary mu(a,b,c) = a . v(a\b, b\c).

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybmap/engine.hpp"
#include "ybmap/quasigroup.hpp"
#include "ybmap/verify.hpp"

namespace ybmap {

struct PreconditionFailed : Error {
    std::vector<VerificationReport> reports;

    PreconditionFailed(const std::string& what, std::vector<VerificationReport> r)
        : Error("precondition failed: " + what), reports(std::move(r)) {}
};

enum class ConstructionKind { Group, AbelianAdditive, Division, Loop, AbelianGeneral };

inline const char* to_string(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::Group: return "group";
        case ConstructionKind::AbelianAdditive: return "abelian_additive";
        case ConstructionKind::Division: return "division";
        case ConstructionKind::Loop: return "loop";
        case ConstructionKind::AbelianGeneral: return "abelian_general";
    }
    return "?";
}

inline ConstructionKind parse_construction_kind(const std::string& s) {
    if (s == "group") return ConstructionKind::Group;
    if (s == "abelian_additive") return ConstructionKind::AbelianAdditive;
    if (s == "division") return ConstructionKind::Division;
    if (s == "loop") return ConstructionKind::Loop;
    if (s == "abelian_general") return ConstructionKind::AbelianGeneral;
    throw std::invalid_argument("unknown construction kind '" + s + "'");
}

/// Quasigroup used when the caller does not name one.
inline std::string default_quasigroup(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::Group: return "multiplicative";
        case ConstructionKind::AbelianAdditive: return "additive";
        case ConstructionKind::Division: return "division";
        case ConstructionKind::Loop: return "subtraction_loop";
        case ConstructionKind::AbelianGeneral: return "multiplicative";
    }
    return "additive";
}

struct ConstructOptions {
    bool strict = true;  // run and enforce preconditions
};

/// Output of a construction together with the precondition verdicts it was built on.
template <class Object>
struct Constructed {
    Object object;
    std::string recipe;
    std::vector<VerificationReport> preconditions;
    bool supported = true;  // false when built from a failing precondition (non-strict mode)
};

namespace detail {

template <class Object>
Constructed<Object> finish(Object obj, std::string recipe, std::vector<VerificationReport> pre,
                           const ConstructOptions& opts) {
    bool ok = std::all_of(pre.begin(), pre.end(), [](const VerificationReport& r) { return r.passed(); });
    if (opts.strict && !ok) throw PreconditionFailed(recipe, std::move(pre));
    return {std::move(obj), std::move(recipe), std::move(pre), ok};
}

}  // namespace detail

/// Working quasigroup (L, *) the edge map T lives on, and the symmetry kind the
/// construction requires, for a kind applied to the structure `q`.
template <Field F>
std::pair<Quasigroup<F>, SymmetryKind> construction_setup(ConstructionKind kind, const Quasigroup<F>& q,
                                                          const F& field) {
    switch (kind) {
        case ConstructionKind::Group:
            if (!q.is_group || !q.left_identity) {
                throw IncompatibleStructure("group construction needs a group, got '" + q.name + "'");
            }
            return {q, SymmetryKind::Homogeneous};
        case ConstructionKind::AbelianAdditive:
            if (q.name != "additive") {
                throw IncompatibleStructure("abelian_additive construction needs (F, +), got '" + q.name + "'");
            }
            return {q, SymmetryKind::Homogeneous};
        case ConstructionKind::Division:
            if (q.name != "division" && q.name != "multiplicative") {
                throw IncompatibleStructure("division construction needs the division quasigroup, got '" + q.name +
                                            "'");
            }
            return {division_quasigroup(field), SymmetryKind::Division};
        case ConstructionKind::Loop:
            if (q.name != "subtraction_loop" && q.name != "additive") {
                throw IncompatibleStructure("loop construction needs the subtraction loop, got '" + q.name + "'");
            }
            return {subtraction_quasigroup(field), SymmetryKind::Loop};
        case ConstructionKind::AbelianGeneral:
            if (!q.is_group || !q.is_abelian) {
                throw IncompatibleStructure("abelian_general construction needs an abelian group, got '" + q.name +
                                            "'");
            }
            return {reversed_quasigroup(q, "reversed(" + q.name + ")"), SymmetryKind::Abelian};
    }
    throw std::logic_error("unreachable");
}

/// R(x, y) = T(e_l, x, x*y) in `w`; no precondition checks.
template <Field F>
YBMap<F> edge_map_construction(const Ternary<F>& t, const Quasigroup<F>& w, std::string name) {
    if (!w.left_identity) throw IncompatibleStructure("quasigroup '" + w.name + "' has no left identity");
    const Point<F> e = *w.left_identity;
    auto mu = t.eval;
    auto op = w.op;
    auto ldiv = w.ldiv;
    YBMap<F> r;
    r.name = std::move(name);
    r.carrier = w.carrier;
    r.param_arity = t.param_arity;
    r.source = "constructed";
    r.degree = 2 * t.degree;
    r.eval = [=](const Point<F>& x, const Params<F>& a, const Point<F>& y, const Params<F>& b) {
        const Point<F> xy = op(x, y);
        const Point<F> m = mu(a, b, e, x, xy);
        return PointPair<F>{ldiv(m, xy), ldiv(e, m)};
    };
    return r;
}

template <Field F>
Constructed<YBMap<F>> yb_from_ternary(const Ternary<F>& t, ConstructionKind kind, const Quasigroup<F>& q,
                                      const Context<F>& ctx, ConstructOptions opts = {}) {
    auto [w, sym] = construction_setup(kind, q, ctx.field);
    std::vector<VerificationReport> pre;
    if (opts.strict) {
        pre.push_back(check_3d_consistency(t, ctx));
        pre.push_back(check_symmetry(t, sym, q, ctx));
    }
    std::string recipe = std::string(to_string(kind)) + "(" + t.name + ", " + q.name + ")";
    YBMap<F> r = edge_map_construction(t, w, recipe);
    r.note = "built from ternary " + t.name + " on " + w.name;
    return detail::finish(std::move(r), recipe, std::move(pre), opts);
}

/// A bijection pi : L -> M with its inverse.
template <Field F>
struct Bijection {
    std::function<Point<F>(const Point<F>&)> forward;
    std::function<Point<F>(const Point<F>&)> inverse;

    static Bijection identity() {
        auto id = [](const Point<F>& p) { return p; };
        return {id, id};
    }
};

/// xi_l(x)(y) = l \ pi^-1(mu(pi(l), pi(l x), pi((l x) y))),
/// eta_l(x)(y) = (l xi_l(y)(x)) \ ((l y) x),
/// R_l(x, y) = (eta_l(y)(x), xi_l(x)(y)).
template <Field F>
Constructed<DynamicalYBMap<F>> dynamical_yb_from_ternary(const Ternary<F>& t, const Quasigroup<F>& q,
                                                         const Context<F>& ctx, ConstructOptions opts = {},
                                                         Bijection<F> pi = Bijection<F>::identity()) {
    std::vector<VerificationReport> pre;
    if (opts.strict) pre.push_back(check_3d_consistency(t, ctx));
    auto mu = t.eval;
    auto op = q.op;
    auto ldiv = q.ldiv;
    auto xi = [=](const Point<F>& lam, const Point<F>& x, const Params<F>& a, const Point<F>& y,
                  const Params<F>& b) {
        const Point<F> lx = op(lam, x);
        return ldiv(lam, pi.inverse(mu(a, b, pi.forward(lam), pi.forward(lx), pi.forward(op(lx, y)))));
    };
    DynamicalYBMap<F> d;
    d.name = "dynamical(" + t.name + ", " + q.name + ")";
    d.quasigroup = q;
    d.param_arity = t.param_arity;
    d.degree = 2 * t.degree;
    d.note = "dynamical map of ternary " + t.name + " on " + q.name;
    d.eval = [=](const Point<F>& lam, const Point<F>& x, const Params<F>& a, const Point<F>& y, const Params<F>& b) {
        Point<F> v = xi(lam, x, a, y, b);
        Point<F> u = ldiv(op(lam, v), op(op(lam, x), y));
        return PointPair<F>{std::move(u), std::move(v)};
    };
    std::string recipe = "dynamical(" + t.name + ", " + q.name + ")";
    return detail::finish(std::move(d), recipe, std::move(pre), opts);
}

/// (l xi_l(x)(y)) eta_l(y)(x) = (l x) y, the dynamical invariance condition.
template <Field F>
VerificationReport check_dynamical_invariance(const DynamicalYBMap<F>& d, const Context<F>& ctx) {
    const Quasigroup<F>& q = d.quasigroup;
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Point<F> lam = sample_point(s, q.carrier), x = sample_point(s, q.carrier), y = sample_point(s, q.carrier);
        Params<F> a = sample_params(s, d.param_arity), b = sample_params(s, d.param_arity);
        auto [u, v] = d.eval(lam, x, a, y, b);
        Point<F> lhs = q.op(q.op(lam, v), u);
        Point<F> rhs = q.op(q.op(lam, x), y);
        if (lhs == rhs) return std::nullopt;
        return Witness{detail::join_points<F>({{"lambda", &lam}, {"x", &x}, {"y", &y}, {"alpha", &a}, {"beta", &b}}),
                       format_point<F>(lhs), format_point<F>(rhs)};
    };
    return run_trials(ctx, "dynamical_invariance@" + q.name, d.name, d.degree, trial);
}

/// mu(a, b, c) = a . v(a\b, b\c), reading the map's second component as xi.
template <Field F>
Constructed<Ternary<F>> ternary_from_yb(const YBMap<F>& r, const Quasigroup<F>& q, const Context<F>& ctx,
                                        ConstructOptions opts = {}) {
    std::vector<VerificationReport> pre;
    if (opts.strict) pre.push_back(check_invariance(r, q, ctx));
    auto eval = r.eval;
    auto op = q.op;
    auto ldiv = q.ldiv;
    Ternary<F> t;
    t.name = "ternary(" + r.name + ", " + q.name + ")";
    t.carrier = q.carrier;
    t.param_arity = r.param_arity;
    t.source = "constructed";
    t.degree = 2 * r.degree;
    t.note = "ternary of map " + r.name + " on " + q.name;
    t.eval = [=](const Params<F>& al, const Params<F>& be, const Point<F>& a, const Point<F>& b, const Point<F>& c) {
        return op(a, eval(ldiv(a, b), al, ldiv(b, c), be).second);
    };
    return detail::finish(std::move(t), "inverse(" + r.name + ", " + q.name + ")", std::move(pre), opts);
}

/// mu(a, b, c) = a . xi_a(a\b)(b\c) for a genuinely dynamical map.
template <Field F>
Constructed<Ternary<F>> ternary_from_dynamical(const DynamicalYBMap<F>& d, const Context<F>& ctx,
                                               ConstructOptions opts = {}) {
    std::vector<VerificationReport> pre;
    if (opts.strict) pre.push_back(check_dynamical_invariance(d, ctx));
    const Quasigroup<F>& q = d.quasigroup;
    auto eval = d.eval;
    auto op = q.op;
    auto ldiv = q.ldiv;
    Ternary<F> t;
    t.name = "ternary(" + d.name + ")";
    t.carrier = q.carrier;
    t.param_arity = d.param_arity;
    t.source = "constructed";
    t.degree = 2 * d.degree;
    t.eval = [=](const Params<F>& al, const Params<F>& be, const Point<F>& a, const Point<F>& b, const Point<F>& c) {
        return op(a, eval(a, ldiv(a, b), al, ldiv(b, c), be).second);
    };
    return detail::finish(std::move(t), "inverse_dynamical(" + d.name + ")", std::move(pre), opts);
}

/// ternary -> map (kind, q) -> ternary over the working quasigroup; compares with the start.
template <Field F>
VerificationReport roundtrip_check(const Ternary<F>& t, ConstructionKind kind, const Quasigroup<F>& q,
                                   const Context<F>& ctx) {
    const ConstructOptions lax{false};
    auto [w, sym] = construction_setup(kind, q, ctx.field);
    (void)sym;
    auto r = yb_from_ternary(t, kind, q, ctx, lax).object;
    auto back = ternary_from_yb(r, w, ctx, lax).object;
    auto rep = check_same_ternary(t, back, ctx, w.carrier);
    rep.identity = "roundtrip";
    rep.subject = t.name + " -> " + to_string(kind) + " -> inverse";
    return rep;
}

/// map -> ternary over q -> map (kind, q); compares with the start.
template <Field F>
VerificationReport roundtrip_check(const YBMap<F>& r, const Quasigroup<F>& q, ConstructionKind kind,
                                   const Context<F>& ctx) {
    const ConstructOptions lax{false};
    auto t = ternary_from_yb(r, q, ctx, lax).object;
    auto back = yb_from_ternary(t, kind, q, ctx, lax).object;
    auto rep = check_same_map(r, back, ctx, q.carrier);
    rep.identity = "roundtrip";
    rep.subject = r.name + " -> inverse -> " + to_string(kind);
    return rep;
}

}  // namespace ybmap
