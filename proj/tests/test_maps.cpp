#include "support.hpp"

using namespace ybmap;
using testing::q;
using testing::qp;
using QF = RationalField;
using PF = PrimeField;

namespace {

// (x1, x2) -> adler on x1, x2 - x1 carried along.
YBMap<PF> adler_with_offset() {
    YBMap<PF> r;
    r.name = "adler_with_offset";
    r.carrier = Carrier::scalars(2);
    r.param_arity = 1;
    r.degree = 8;
    const auto a = closed_form::adler<PF>();
    r.eval = [a](const Point<PF>& x, const Params<PF>& al, const Point<PF>& y, const Params<PF>& be) {
        auto [u, v] = a({x[0]}, al, {y[0]}, be);
        return PointPair<PF>{{u[0], u[0] + (x[1] - x[0])}, {v[0], v[0] + (y[1] - y[0])}};
    };
    return r;
}

// Coordinatewise product of scalar maps with a common parameter.
YBMap<PF> product(std::vector<YBMap<PF>> parts) {
    YBMap<PF> r;
    r.name = "product";
    r.carrier = Carrier::nonzero(parts.size());
    r.param_arity = 1;
    r.degree = 8;
    r.eval = [parts](const Point<PF>& x, const Params<PF>& a, const Point<PF>& y, const Params<PF>& b) {
        PointPair<PF> out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            auto [u, v] = parts[i]({x[i]}, a, {y[i]}, b);
            out.first.push_back(u[0]);
            out.second.push_back(v[0]);
        }
        return out;
    };
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// YB equation and friends

TEST_CASE("catalog maps satisfy the YB equation; the broken map does not") {
    const auto ctx = testing::fp_ctx(200);
    for (const std::string name : {"adler", "q1_additive_map", "h2", "f4", "f5", "fourparam", "fourparam_involution",
                                   "mkdv_toda_homotopy", "case1_map"}) {
        INFO(name);
        const auto r = check_yb(lookup_map(ctx.field, name), ctx);
        CHECK(r.verdict == Verdict::Pass);
        CHECK(r.used == 200);
    }
    const auto bad = check_yb(broken_map<PF>(), ctx);
    CHECK(bad.verdict == Verdict::Fail);
    CHECK(bad.failures.size() == 5);
    CHECK(bad.failures[0].lhs != bad.failures[0].rhs);
}

TEST_CASE("YB over exact rationals and with equal parameters") {
    const auto ctx = testing::q_ctx(30);
    CHECK(check_yb(closed_form::h2<QF>(), ctx).passed());
    auto eq = testing::fp_ctx(100);
    eq.opt.equal_params = true;
    CHECK(check_yb(closed_form::fourparam<PF>(), eq).passed());
}

TEST_CASE("H_II at a hand-computed point") {
    const auto r = closed_form::h2<QF>();
    const Rational al = q(2), be = q(1), x = q(2), y = q(3);
    const Rational p = al * x * y + (be - al) * x - be;  // 9
    const Rational d = be * x * y + (al - be) * y - al;  // 7
    const auto [u, v] = r(qp({x}), qp({al}), qp({y}), qp({be}));
    CHECK(u[0] == y * p / d);
    CHECK(v[0] == x * d / p);
    CHECK(u[0] == q(27, 7));
    CHECK(v[0] == q(14, 9));
    CHECK(u[0] * v[0] == x * y);
}

TEST_CASE("fourparam is not an involution: second iterate at a fixed point") {
    const auto r = closed_form::fourparam<QF>();
    const auto a = qp({q(1), q(2)}), b = qp({q(3), q(5)});
    const auto [u, v] = r(qp({q(1)}), a, qp({q(2)}), b);
    CHECK(u[0] == q(14, 11));
    CHECK(v[0] == q(7, 11));
    const auto [u2, v2] = r(u, a, v, b);
    CHECK(u2[0] == q(8, 11));
    CHECK(u2[0] != q(1));
    (void)v2;
    const auto ctx = testing::fp_ctx(100);
    CHECK(check_involution(closed_form::fourparam<PF>(), ctx).verdict == Verdict::Fail);
    CHECK(check_involution(closed_form::adler<PF>(), ctx).passed());
    CHECK(check_involution(closed_form::fourparam_involution<PF>(), ctx).passed());
}

TEST_CASE("maps collapse to the swap at equal parameters") {
    const PF f;
    Sampler<PF> s(f, 1, derive_rng(21, 0));
    for (const std::string name : {"adler", "f4", "f5", "h2", "fourparam", "fourparam_involution"}) {
        INFO(name);
        const auto r = lookup_map(f, name);
        for (int i = 0; i < 100; ++i) {
            const auto x = sample_point(s, r.carrier), y = sample_point(s, r.carrier);
            const auto a = sample_params(s, r.param_arity);
            try {
                const auto [u, v] = r(x, a, y, a);
                REQUIRE(u == y);
                REQUIRE(v == x);
            } catch (const PoleError&) {
            }
        }
    }
}

TEST_CASE("invariance conditions of the scalar maps") {
    const auto ctx = testing::fp_ctx(200);
    const std::vector<std::pair<std::string, std::string>> cases{{"fourparam", "division"},
                                                                 {"h2", "multiplicative"},
                                                                 {"fourparam_involution", "multiplicative"},
                                                                 {"f5", "subtraction_loop"},
                                                                 {"adler", "additive"}};
    for (const auto& [m, qname] : cases) {
        INFO(m);
        CHECK(check_invariance(lookup_map(ctx.field, m), builtin_quasigroup(ctx.field, qname), ctx).passed());
    }
    CHECK(check_invariance(closed_form::fourparam<PF>(), multiplicative_group(ctx.field), ctx).verdict ==
          Verdict::Fail);
    CHECK_THROWS_AS(check_invariance(closed_form::adler<PF>(), matrix_reversed(ctx.field, 2), ctx),
                    IncompatibleStructure);
}

TEST_CASE("worked dKdV cube") {
    const auto t = closed_form::dkdv_ternary<QF>();
    const auto c = cube_values(t, qp({q(1)}), qp({q(2)}), qp({q(4)}), qp({q(0)}), qp({q(1)}), qp({q(2)}),
                               qp({q(3)}));
    CHECK(c.w1[0] == q(3, 2));
    CHECK(c.w2[0] == q(3));
    CHECK(c.w3_via_w1[0] == q(2));
    CHECK(c.w3_via_w2[0] == q(2));
    CHECK(c.w4_via_w1[0] == q(4));
    CHECK(c.w4_via_w2[0] == q(4));
    CHECK(c.consistent());
}

TEST_CASE("3D consistency and symmetry of the ternary systems") {
    const auto ctx = testing::fp_ctx(200);
    for (const auto& e : catalog_entries(ctx.field)) {
        if (e.kind != EntryKind::Ternary) continue;
        INFO(e.name);
        CHECK(check_3d_consistency(*e.ternary, ctx).passed());
        for (const auto& [kind, qname] : e.expect.symmetries) {
            CHECK(check_symmetry(*e.ternary, kind, builtin_quasigroup(ctx.field, qname), ctx).passed());
        }
    }
    for (const auto& t : broken_ternaries<PF>()) CHECK(check_3d_consistency(t, ctx).verdict == Verdict::Fail);
    CHECK(check_symmetry(closed_form::q1_ternary<PF>(), SymmetryKind::Division, division_quasigroup(ctx.field), ctx)
              .verdict == Verdict::Fail);
    CHECK_THROWS_AS(
        check_symmetry(closed_form::q1_ternary<PF>(), SymmetryKind::Loop, multiplicative_group(ctx.field), ctx),
        IncompatibleStructure);
}

TEST_CASE("Q1 special values") {
    const auto t = closed_form::q1_ternary<QF>();
    CHECK(t(qp({q(1)}), qp({q(2)}), qp({q(1)}), qp({q(2)}), qp({q(3)}))[0] == q(7, 3));
    CHECK(t(qp({q(3)}), qp({q(3)}), qp({q(5)}), qp({q(-2)}), qp({q(7)}))[0] == q(-2));
    CHECK_THROWS_AS(closed_form::dkdv_ternary<QF>()(qp({q(1)}), qp({q(2)}), qp({q(1)}), qp({q(2)}), qp({q(1)})),
                    DivisionByZero);
}

// ---------------------------------------------------------------------------
// Dynamical maps

TEST_CASE("dynamical map of dKdV on the multiplicative group") {
    const auto ctx = testing::fp_ctx(200);
    const auto d = dynamical_yb_from_ternary(closed_form::dkdv_ternary<PF>(), multiplicative_group(ctx.field), ctx)
                       .object;
    CHECK(check_dynamical_yb(d, ctx).passed());
    CHECK(check_lambda_independence(d, ctx).verdict == Verdict::Fail);
    CHECK(check_dynamical_invariance(d, ctx).passed());

    Sampler<PF> s(ctx.field, 1, derive_rng(5, 0));
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        const Fp lam = s.draw_nonzero(), x = s.draw_nonzero(), y = s.draw_nonzero(), a = s.draw_nonzero(),
                 b = s.draw_nonzero();
        try {
            const Fp want = x - (a - b) / (lam * lam * (x * y - ctx.field.one()));
            REQUIRE(d.eval({lam}, {x}, {a}, {y}, {b}).second[0] == want);
            ++checked;
        } catch (const PoleError&) {
        }
    }
    CHECK(checked > 250);
}

TEST_CASE("homogeneous ternaries give lambda-independent maps") {
    const auto ctx = testing::fp_ctx(200);
    const auto d =
        dynamical_yb_from_ternary(closed_form::q1_ternary<PF>(), additive_group(ctx.field), ctx).object;
    CHECK(check_lambda_independence(d, ctx).passed());
    CHECK(check_dynamical_yb(d, ctx).passed());
    const auto lifted = lift_to_dynamical(closed_form::adler<PF>(), additive_group(ctx.field));
    CHECK(check_lambda_independence(lifted, ctx).passed());
    CHECK(check_dynamical_yb(lifted, ctx).passed());
    CHECK(check_dynamical_yb(lift_to_dynamical(broken_map<PF>(), additive_group(ctx.field)), ctx).verdict ==
          Verdict::Fail);
}

TEST_CASE("dynamical construction through a nontrivial bijection") {
    const auto ctx = testing::fp_ctx(150);
    const PF f = ctx.field;
    const Fp two = f.from_int(2), three = f.from_int(3);
    Bijection<PF> pi{[=](const Point<PF>& p) { return Point<PF>{two * p[0] + three}; },
                     [=](const Point<PF>& p) { return Point<PF>{(p[0] - three) / two}; }};
    const auto d = dynamical_yb_from_ternary(closed_form::dkdv_ternary<PF>(), additive_group(f), ctx, {}, pi).object;
    CHECK(check_dynamical_yb(d, ctx).passed());
}

TEST_CASE("ternary from a dynamical map recovers the ternary") {
    const auto ctx = testing::fp_ctx(200);
    const auto t = closed_form::dkdv_ternary<PF>();
    const auto d = dynamical_yb_from_ternary(t, multiplicative_group(ctx.field), ctx).object;
    const auto back = ternary_from_dynamical(d, ctx).object;
    CHECK(check_same_ternary(back, t, ctx, Carrier::nonzero()).passed());
}

// ---------------------------------------------------------------------------
// Constructions

TEST_CASE("constructions reproduce the catalog maps at 1000 points") {
    const auto ctx = testing::fp_ctx(1000, 2);
    for (const auto& fact : construction_facts()) {
        INFO(fact.ternary << " / " << to_string(fact.kind) << " -> " << fact.map);
        const auto built = yb_from_ternary(lookup_ternary(ctx.field, fact.ternary), fact.kind,
                                           builtin_quasigroup(ctx.field, fact.quasigroup), ctx.with_samples(100));
        CHECK(built.supported);
        CHECK(built.preconditions.size() == 2);
        CHECK(check_same_map(built.object, lookup_map(ctx.field, fact.map), ctx).passed());
    }
}

TEST_CASE("inverse construction at a hand-computed point") {
    const auto ctx = testing::q_ctx(20);
    const auto t = ternary_from_yb(closed_form::fourparam<QF>(), division_quasigroup(ctx.field), ctx).object;
    const auto w = t(qp({q(1), q(2)}), qp({q(3), q(5)}), qp({q(1)}), qp({q(2)}), qp({q(3)}));
    CHECK(w[0] == q(9, 8));
    CHECK(closed_form::fourparam_ternary<QF>()(qp({q(1), q(2)}), qp({q(3), q(5)}), qp({q(1)}), qp({q(2)}),
                                                qp({q(3)}))[0] == q(9, 8));
}

TEST_CASE("inverse constructions and round trips close") {
    const auto ctx = testing::fp_ctx(200);
    for (const auto& fact : inverse_facts()) {
        if (fact.quasigroup.rfind("matrix", 0) == 0) continue;
        INFO(fact.map << " over " << fact.quasigroup);
        const auto qg = builtin_quasigroup(ctx.field, fact.quasigroup);
        const auto t = ternary_from_yb(lookup_map(ctx.field, fact.map), qg, ctx).object;
        CHECK(check_same_ternary(t, lookup_ternary(ctx.field, fact.ternary), ctx).passed());
    }
    CHECK(roundtrip_check(closed_form::f5<PF>(), subtraction_quasigroup(ctx.field), ConstructionKind::Loop, ctx)
              .passed());
    CHECK(roundtrip_check(closed_form::fourparam<PF>(), division_quasigroup(ctx.field), ConstructionKind::Division,
                          ctx)
              .passed());
    CHECK(roundtrip_check(closed_form::dkdv_ternary<PF>(), ConstructionKind::AbelianAdditive,
                          additive_group(ctx.field), ctx)
              .passed());
}

TEST_CASE("strict mode refuses failing preconditions") {
    const auto ctx = testing::fp_ctx(50);
    const auto sum = broken_ternaries<PF>()[0];
    try {
        yb_from_ternary(sum, ConstructionKind::AbelianAdditive, additive_group(ctx.field), ctx);
        FAIL("expected PreconditionFailed");
    } catch (const PreconditionFailed& e) {
        REQUIRE(e.reports.size() == 2);
        CHECK(e.reports[0].verdict == Verdict::Fail);
    }
    const auto loose =
        yb_from_ternary(sum, ConstructionKind::AbelianAdditive, additive_group(ctx.field), ctx, {false});
    CHECK(loose.preconditions.empty());
    // dKdV is not homogeneous over the multiplicative group
    CHECK_THROWS_AS(yb_from_ternary(closed_form::dkdv_ternary<PF>(), ConstructionKind::Group,
                                    multiplicative_group(ctx.field), ctx),
                    PreconditionFailed);
    CHECK_THROWS_AS(ternary_from_yb(closed_form::h2<PF>(), division_quasigroup(ctx.field), ctx), PreconditionFailed);
    CHECK_THROWS_AS(yb_from_ternary(closed_form::dkdv_ternary<PF>(), ConstructionKind::AbelianAdditive,
                                    multiplicative_group(ctx.field), ctx),
                    IncompatibleStructure);
    CHECK_THROWS_AS(yb_from_ternary(closed_form::dkdv_ternary<PF>(), ConstructionKind::Group,
                                    division_quasigroup(ctx.field), ctx),
                    IncompatibleStructure);
    CHECK_THROWS_AS(parse_construction_kind("ring"), std::invalid_argument);
    CHECK(default_quasigroup(parse_construction_kind("loop")) == "subtraction_loop");
}

// ---------------------------------------------------------------------------
// Lax matrices

TEST_CASE("refactorization and strongness") {
    auto ctx = testing::fp_ctx(100);
    const auto fp = closed_form::fourparam<PF>();
    const auto L = closed_form::fourparam_lax<PF>();
    CHECK(check_refactorization(L, fp, ctx).passed());
    CHECK(check_strongness(L, fp, ctx).passed());
    CHECK(check_refactorization(case_one_lax(ctx.field), case_one_map(ctx.field), ctx).passed());
    CHECK(check_strongness(case_one_lax(ctx.field), case_one_map(ctx.field), ctx).passed());
    CHECK(check_refactorization(L, closed_form::fourparam_involution<PF>(), ctx).verdict == Verdict::Fail);
    CHECK(check_strongness(identity_lax(ctx.field, 1, 2), fp, ctx).verdict == Verdict::Fail);
    CHECK_THROWS_AS(check_refactorization(L, closed_form::adler<PF>(), ctx), IncompatibleStructure);
    ctx.opt.zeta_points = 2;
    CHECK_THROWS_AS(check_refactorization(L, fp, ctx), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Reduction

TEST_CASE("Case I map keeps x1 = 0") {
    const QF f;
    const auto r = case_one_map(f);
    const auto [u, v] = r(qp({q(0), q(2)}), qp({q(1), q(2)}), qp({q(0), q(3)}), qp({q(3), q(5)}));
    CHECK(u[0] == q(0));
    CHECK(v[0] == q(0));
    const auto fp = closed_form::fourparam<QF>()(qp({q(2)}), qp({q(1), q(2)}), qp({q(3)}), qp({q(3), q(5)}));
    CHECK(u[1] == fp.first[0]);
    CHECK(v[1] == fp.second[0]);
}

TEST_CASE("reduction of the Case I pair") {
    const auto ctx = testing::fp_ctx(200);
    const auto big = case_one_map(ctx.field);
    const auto zero = zero_constraint(ctx.field, 2, 1);
    CHECK(check_compatibility(big, zero, ctx).passed());
    const auto small = reduce_map(big, zero, ctx).object;
    CHECK(small.carrier.dim == 1);
    CHECK(check_same_map(small, closed_form::fourparam<PF>(), ctx, Carrier::nonzero()).passed());
    const auto small_lax = reduce_lax(case_one_lax(ctx.field), big, zero, ctx).object;
    CHECK(small_lax.dim == 1);
    CHECK(check_refactorization(small_lax, small, ctx).passed());

    // reduced Lax matrix is [[-a1 z, x], [1/x, -a2 z]]
    Sampler<PF> s(ctx.field, 1, derive_rng(8, 0));
    for (int i = 0; i < 100; ++i) {
        const Fp x = s.draw_nonzero(), a1 = s.draw_nonzero(), a2 = s.draw_nonzero(), z = s.draw();
        const SquareMatrix<Fp> want{{-(a1 * z), x}, {x.inverse(), -(a2 * z)}};
        REQUIRE(small_lax({x}, {a1, a2}, z) == want);
        REQUIRE(closed_form::fourparam_lax<PF>()({x}, {a1, a2}, z) == want);
    }

    // at alpha = beta the reduced map is the swap
    for (int i = 0; i < 100; ++i) {
        const Fp x = s.draw_nonzero(), y = s.draw_nonzero();
        const Params<PF> a = s.draw_nonzero(2);
        try {
            const auto [u, v] = small({x}, a, {y}, a);
            REQUIRE(u[0] == y);
            REQUIRE(v[0] == x);
        } catch (const PoleError&) {
        }
    }
}

TEST_CASE("homotopy reparametrization and parameter pinning") {
    const auto ctx = testing::fp_ctx(200);
    const auto g = homotopy_reparametrization(ctx.field, kHomotopyR);
    CHECK(g.arity == 1);
    const auto h = reparametrize(closed_form::fourparam<PF>(), g, "h");
    CHECK(check_same_map(h, lookup_map(ctx.field, "mkdv_toda_homotopy"), ctx).passed());
    CHECK(check_yb(h, ctx).passed());
    const auto hl = reparametrize(closed_form::fourparam_lax<PF>(), g, "hl");
    CHECK(check_refactorization(hl, h, ctx).passed());
    const auto ht = reparametrize(closed_form::fourparam_ternary<PF>(), g, "ht");
    CHECK(check_same_ternary(ht, lookup_ternary(ctx.field, "homotopy_ternary"), ctx).passed());

    const auto pin = pin_parameter(ctx.field, 2, 0, "1");
    const auto pinned = reparametrize(closed_form::fourparam<PF>(), pin, "pinned");
    CHECK(pinned.param_arity == 1);
    CHECK(check_yb(pinned, ctx).passed());
    CHECK(check_strongness(reparametrize(closed_form::fourparam_lax<PF>(), pin, "pl"), pinned, ctx).passed());
    const auto one = ctx.field.one(), two = ctx.field.from_int(2), five = ctx.field.from_int(5);
    CHECK(pinned({two}, {five}, {five}, {two}) == closed_form::fourparam<PF>()({two}, {one, five}, {five}, {one, two}));
}

TEST_CASE("constraints on a synthetic two-dimensional map, index 2") {
    const auto ctx = testing::fp_ctx(200);
    const auto r = adler_with_offset();
    const auto good = parse_constraint(ctx.field, "expr:x1 + a1", 2, 2, 1);
    CHECK(good.index == 2);
    CHECK(check_compatibility(r, good, ctx).passed());
    const auto reduced = reduce_map(r, good, ctx).object;
    CHECK(check_same_map(reduced, closed_form::adler<PF>(), ctx).passed());
    const auto bad = parse_constraint(ctx.field, "expr:x1*a1", 2, 2, 1);
    CHECK(check_compatibility(r, bad, ctx).verdict == Verdict::Fail);
    CHECK_THROWS_AS(reduce_map(r, bad, ctx), PreconditionFailed);
    CHECK_THROWS_AS(parse_constraint(ctx.field, "expr:x2", 2, 2, 1), UndeclaredSymbol);
    CHECK_THROWS_AS(parse_constraint(ctx.field, "zero", 2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_constraint(ctx.field, "nonsense", 2, 1, 1), std::invalid_argument);
    CHECK(parse_constraint(ctx.field, "constant:7", 2, 1, 1)({}, {ctx.field.one()}) == ctx.field.from_int(7));
}

TEST_CASE("constraints on a three-dimensional product map") {
    const auto ctx = testing::fp_ctx(200);
    const auto a = closed_form::adler<PF>(), f5 = closed_form::f5<PF>();
    const auto r = product({a, f5, a});
    CHECK(check_yb(r, ctx).passed());
    const auto same13 = parse_constraint(ctx.field, "expr:x1", 3, 3, 1);
    CHECK(check_compatibility(r, same13, ctx).passed());
    const auto reduced = reduce_map(r, same13, ctx).object;
    CHECK(reduced.carrier.dim == 2);
    CHECK(check_same_map(reduced, product({a, f5}), ctx).passed());
    CHECK(check_yb(reduced, ctx).passed());
    const auto same12 = parse_constraint(ctx.field, "expr:x1", 3, 2, 1);
    CHECK(check_compatibility(r, same12, ctx).verdict == Verdict::Fail);
    CHECK_THROWS_AS(check_compatibility(r, zero_constraint(ctx.field, 2, 1), ctx), IncompatibleStructure);
}

// ---------------------------------------------------------------------------
// GL_2

TEST_CASE("characteristic coefficients") {
    const QF f;
    using M = SquareMatrix<Rational>;
    const M x{{q(1), q(2)}, {q(3), q(4)}};
    const M k = M::diagonal({q(2), q(3)});
    const auto c = char_coeffs(f, x, k);
    // (1 - 2z)(4 - 3z) - 6 = 6 z^2 - 11 z - 2
    CHECK(c.f2 == q(6));
    CHECK(c.f1 == q(11));
    CHECK(c.f0 == q(-2));
    CHECK(c.f0 == x.det());
    const auto ck = char_coeffs(f, k, k);
    CHECK(ck.f2 == k.det());
    CHECK(ck.f1 == q(2) * k.det());
    CHECK(ck.f0 == k.det());
    CHECK_THROWS_AS(char_coeffs(f, M::identity(3, q(1)), M::identity(3, q(1))), UnsupportedOrder);
}

TEST_CASE("GL_2 map and ternary at the identity") {
    const QF f;
    const auto fam = diagonal_family<QF>();
    const std::vector<Rational> id{q(1), q(0), q(0), q(1)};
    const auto [u, v] = gl_yb_map(f, fam)(id, qp({q(2), q(3)}), id, qp({q(5), q(7)}));
    CHECK(u == id);
    CHECK(v == id);
    const auto t = gl_ternary(f, fam);
    CHECK(t(qp({q(2), q(3)}), qp({q(5), q(7)}), id, id, id) == id);
}

TEST_CASE("GL_2 suite") {
    const auto ctx = testing::fp_ctx(100);
    const auto diag = diagonal_family<PF>();
    const auto poly = polynomial_family(ctx.field, SquareMatrix<Fp>{{ctx.field.zero(), ctx.field.one()},
                                                                    {ctx.field.from_int(2), ctx.field.from_int(3)}});
    CHECK(check_commutation(diag, ctx).passed());
    CHECK(check_commutation(poly, ctx).passed());
    const CommutingFamily<PF> noncommuting{"upper", 2, 2, [](const Params<PF>& a) {
                                               return SquareMatrix<Fp>{{a[0], a[1]}, {a[0] - a[0], a[1]}};
                                           }};
    CHECK(check_commutation(noncommuting, ctx).verdict == Verdict::Fail);

    const auto r = gl_yb_map(ctx.field, diag);
    CHECK(check_yb(r, ctx).passed());
    CHECK(check_gl_matrix_invariant(r, diag, ctx).passed());
    CHECK(check_gl_spectral_invariants(r, diag, ctx).passed());
    CHECK(check_invariance(r, matrix_reversed(ctx.field, 2), ctx).passed());

    const auto rp = gl_yb_map(ctx.field, poly, "gl2_poly");
    CHECK(check_yb(rp, ctx.with_samples(50)).passed());
    CHECK(check_gl_matrix_invariant(rp, poly, ctx.with_samples(50)).passed());

    const auto half = ctx.with_samples(50);
    const auto t = gl_ternary(ctx.field, diag);
    CHECK(check_3d_consistency(t, half).passed());
    const auto inv = ternary_from_yb(r, matrix_reversed(ctx.field, 2), half).object;
    CHECK(check_same_ternary(t, inv, half).passed());
    CHECK_THROWS_AS(polynomial_family(ctx.field, SquareMatrix<Fp>::identity(3, ctx.field.one())), UnsupportedOrder);
}
