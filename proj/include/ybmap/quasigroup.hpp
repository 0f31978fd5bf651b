#pragma once

// Left quasigroups: a carrier with u.v and left division u\w, optionally a
// left identity. The builtins cover every structure the constructions use.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

#include "ybmap/engine.hpp"
#include "ybmap/errors.hpp"
#include "ybmap/objects.hpp"

namespace ybmap {

template <Field F>
struct Quasigroup {
    using BinOp = std::function<Point<F>(const Point<F>&, const Point<F>&)>;

    std::string name;
    Carrier carrier;
    BinOp op;
    BinOp ldiv;
    std::optional<Point<F>> left_identity;
    bool is_group = false;
    bool is_abelian = false;
    bool is_loop = false;
};

namespace detail {

template <Field F>
Point<F> zip(const Point<F>& a, const Point<F>& b, auto&& f) {
    Point<F> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f(a[i], b[i]));
    return out;
}

}  // namespace detail

/// (F, +): e = 0, u\w = w - u.
template <Field F>
Quasigroup<F> additive_group(const F& field) {
    using P = Point<F>;
    return {"additive",
            Carrier::scalars(),
            [](const P& u, const P& v) { return detail::zip<F>(u, v, [](auto& a, auto& b) { return a + b; }); },
            [](const P& u, const P& w) { return detail::zip<F>(w, u, [](auto& a, auto& b) { return a - b; }); },
            P{field.zero()},
            true,
            true,
            true};
}

/// (F*, .): e = 1, u\w = w / u.
template <Field F>
Quasigroup<F> multiplicative_group(const F& field) {
    using P = Point<F>;
    return {"multiplicative",
            Carrier::nonzero(),
            [](const P& u, const P& v) { return detail::zip<F>(u, v, [](auto& a, auto& b) { return a * b; }); },
            [](const P& u, const P& w) { return detail::zip<F>(w, u, [](auto& a, auto& b) { return a / b; }); },
            P{field.one()},
            true,
            true,
            true};
}

/// From a group (G, .) the quasigroup a*b = b.a^{-1}, a\b = b.a, with left identity e.
/// The multiplicative group gives the division quasigroup, the additive one
/// the subtraction quasigroup.
template <Field F>
Quasigroup<F> reversed_quasigroup(const Quasigroup<F>& g, std::string name) {
    if (!g.is_group || !g.left_identity) {
        throw IncompatibleStructure("reversed quasigroup needs a group, got '" + g.name + "'");
    }
    using P = Point<F>;
    const P e = *g.left_identity;
    auto op = g.op;
    auto ldiv = g.ldiv;
    return {std::move(name),
            g.carrier,
            [op, ldiv, e](const P& a, const P& b) { return op(b, ldiv(a, e)); },
            [op](const P& a, const P& b) { return op(b, a); },
            e,
            false,
            false,
            false};
}

/// (F*, a*b = b/a), left identity 1, a\b = ab.
template <Field F>
Quasigroup<F> division_quasigroup(const F& field) {
    using P = Point<F>;
    return {"division",
            Carrier::nonzero(),
            [](const P& a, const P& b) { return detail::zip<F>(b, a, [](auto& x, auto& y) { return x / y; }); },
            [](const P& a, const P& b) { return detail::zip<F>(a, b, [](auto& x, auto& y) { return x * y; }); },
            P{field.one()},
            false,
            false,
            false};
}

/// (F, a*b = b-a), left identity 0, a\b = a+b. 0 is not a right identity (u*0 = -u).
template <Field F>
Quasigroup<F> subtraction_quasigroup(const F& field) {
    using P = Point<F>;
    return {"subtraction_loop",
            Carrier::scalars(),
            [](const P& a, const P& b) { return detail::zip<F>(b, a, [](auto& x, auto& y) { return x - y; }); },
            [](const P& a, const P& b) { return detail::zip<F>(a, b, [](auto& x, auto& y) { return x + y; }); },
            P{field.zero()},
            false,
            false,
            false};
}

/// Invertible n x n matrices with A*B = BA and A\B = B A^{-1}.
template <Field F>
Quasigroup<F> matrix_reversed(const F& field, std::size_t n) {
    using P = Point<F>;
    auto mul = [](const P& a, const P& b) { return (as_matrix(b) * as_matrix(a)).entries(); };
    auto div = [](const P& a, const P& b) { return (as_matrix(b) * as_matrix(a).inverse()).entries(); };
    return {"matrix_reversed(" + std::to_string(n) + ")",
            Carrier::matrices(n),
            mul,
            div,
            SquareMatrix<Elem<F>>::identity(n, field.one()).entries(),
            true,
            n == 1,
            true};
}

/// Builtin names: additive, multiplicative, division, subtraction_loop,
/// matrix_reversed(n) (also matrix_reversed, meaning n = 2).
template <Field F>
Quasigroup<F> builtin_quasigroup(const F& field, const std::string& name) {
    if (name == "additive") return additive_group(field);
    if (name == "multiplicative") return multiplicative_group(field);
    if (name == "division") return division_quasigroup(field);
    if (name == "subtraction_loop") return subtraction_quasigroup(field);
    if (name == "matrix_reversed") return matrix_reversed(field, 2);
    const std::string prefix = "matrix_reversed(";
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size() + 1 && name.back() == ')') {
        const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 3) {
            const auto n = static_cast<std::size_t>(std::stoul(digits));
            if (n >= 1) return matrix_reversed(field, n);
        }
    }
    throw UnknownQuasigroup(name);
}

inline const std::vector<std::string>& builtin_quasigroup_names() {
    static const std::vector<std::string> names{"additive", "multiplicative", "division", "subtraction_loop",
                                                "matrix_reversed(n)"};
    return names;
}

struct LawCheck {
    VerificationReport report;
    bool required = false;  // demanded by the quasigroup axioms or by a claimed flag
};

struct AxiomReport {
    std::string quasigroup;
    std::vector<LawCheck> laws;

    /// True when every required law passed.
    bool claims_hold() const {
        return std::all_of(laws.begin(), laws.end(),
                           [](const LawCheck& l) { return !l.required || l.report.passed(); });
    }

    const LawCheck& law(const std::string& name) const {
        for (const auto& l : laws) {
            if (l.report.identity == name) return l;
        }
        throw std::out_of_range("no law " + name);
    }
};

/// Samples every left-quasigroup law plus the algebraic properties the flags
/// claim (associativity, commutativity, two-sided identity). Properties that
/// are not claimed are still tested and reported, just not required.
template <Field F>
AxiomReport check_axioms(const Quasigroup<F>& q, const Context<F>& ctx) {
    using P = Point<F>;
    AxiomReport out{q.name, {}};
    auto law = [&](const std::string& name, bool required, std::size_t arity,
                   std::function<std::pair<P, P>(const std::vector<P>&)> sides) {
        Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
            std::vector<P> args;
            for (std::size_t i = 0; i < arity; ++i) args.push_back(sample_point(s, q.carrier));
            auto [lhs, rhs] = sides(args);
            if (lhs == rhs) return std::nullopt;
            std::string in;
            for (std::size_t i = 0; i < args.size(); ++i) {
                in += (i ? ", " : "") + std::string(1, static_cast<char>('u' + i)) + "=" + format_point<F>(args[i]);
            }
            return Witness{in, format_point<F>(lhs), format_point<F>(rhs)};
        };
        out.laws.push_back({run_trials(ctx, name, q.name, 8, trial), required});
    };

    law("left_division_cancel", true, 2, [&](const std::vector<P>& a) {
        return std::pair{q.op(a[0], q.ldiv(a[0], a[1])), a[1]};
    });
    law("left_division_recover", true, 2, [&](const std::vector<P>& a) {
        return std::pair{q.ldiv(a[0], q.op(a[0], a[1])), a[1]};
    });
    if (q.left_identity) {
        const P e = *q.left_identity;
        law("left_identity", true, 1, [&, e](const std::vector<P>& a) { return std::pair{q.op(e, a[0]), a[0]}; });
        law("right_identity", q.is_loop, 1, [&, e](const std::vector<P>& a) { return std::pair{q.op(a[0], e), a[0]}; });
    }
    law("associativity", q.is_group, 3, [&](const std::vector<P>& a) {
        return std::pair{q.op(q.op(a[0], a[1]), a[2]), q.op(a[0], q.op(a[1], a[2]))};
    });
    law("commutativity", q.is_abelian, 2, [&](const std::vector<P>& a) {
        return std::pair{q.op(a[0], a[1]), q.op(a[1], a[0])};
    });
    return out;
}

}  // namespace ybmap
