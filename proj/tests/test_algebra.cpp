#include "support.hpp"

using namespace ybmap;
using testing::q;

TEST_CASE("rationals stay in lowest terms with a positive denominator") {
    const Rational r = Rational::fraction(6, -4);
    CHECK(r.to_string() == "-3/2");
    CHECK(r.value().get_den() > 0);
    CHECK(Rational::parse("10/4") == q(5, 2));
    CHECK(Rational::parse("-7") == q(-7));
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(q(1) / q(0), DivisionByZero);
    CHECK_THROWS_AS(q(0).inverse(), DivisionByZero);
}

TEST_CASE("rational arithmetic on small values") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(1, 2) - q(1, 3) == q(1, 6));
    CHECK(q(2, 3) * q(9, 4) == q(3, 2));
    CHECK(q(2, 3) / q(4, 9) == q(3, 2));
    CHECK(-q(2, 3) == q(-2, 3));
}

TEST_CASE("prime field arithmetic") {
    const PrimeField f(101);
    CHECK(f.from_int(-1) == f.from_int(100));
    CHECK((f.from_int(7) * f.from_int(7).inverse()) == f.one());
    CHECK(f.parse("1/2") * f.from_int(2) == f.one());
    CHECK(f.parse("-3") == f.from_int(98));
    CHECK(f.name() == "fp:101");
    CHECK_THROWS_AS(f.zero().inverse(), DivisionByZero);
    CHECK_THROWS_AS(PrimeField(100), std::invalid_argument);
    CHECK_THROWS_AS(f.from_int(1) + PrimeField(103).one(), std::logic_error);
}

TEST_CASE("Mersenne reduction agrees with generic reduction") {
    const PrimeField f;
    Rng rng(7);
    const unsigned __int128 p = kMersenne61;
    for (int i = 0; i < 1000; ++i) {
        const Fp a = f.random(rng, 0), b = f.random(rng, 0);
        const auto want = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.value()) * b.value()) % p);
        REQUIRE((a * b).value() == want);
    }
}

TEST_CASE("primality test") {
    CHECK(is_prime(2));
    CHECK(is_prime(kMersenne61));
    CHECK(is_prime(1000000007));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));  // Carmichael
    CHECK_FALSE(is_prime(kMersenne61 - 2));
}

template <class F>
void field_axioms(const F& f, std::int64_t bound) {
    Rng rng(42);
    for (int i = 0; i < 1000; ++i) {
        const auto a = f.random(rng, bound), b = f.random(rng, bound), c = f.random(rng, bound);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + f.zero() == a);
        REQUIRE(a * f.one() == a);
        REQUIRE(a - a == f.zero());
        if (!a.is_zero()) REQUIRE(a * a.inverse() == f.one());
        if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
}

TEST_CASE("field axioms hold at 1000 random triples") {
    field_axioms(RationalField{}, 1000);
    field_axioms(PrimeField{}, 0);
    field_axioms(PrimeField(1000003), 0);
}

TEST_CASE("powers, with 0^0 = 1 and negative exponents") {
    const RationalField f;
    CHECK(power(f, q(2), 10) == q(1024));
    CHECK(power(f, q(2), -3) == q(1, 8));
    CHECK(power(f, q(0), 0) == q(1));
    CHECK_THROWS_AS(power(f, q(0), -1), DivisionByZero);
}

TEST_CASE("derived streams do not depend on how many were drawn before") {
    Rng a = derive_rng(5, 17);
    Rng b = derive_rng(5, 17);
    CHECK(a() == b());
    CHECK(derive_rng(5, 17)() != derive_rng(5, 18)());
    CHECK(derive_rng(5, 17)() != derive_rng(6, 17)());
}

TEST_CASE("samplers honor the height bound and the nonzero request") {
    const RationalField f;
    Sampler<RationalField> s(f, 3, derive_rng(1, 0));
    for (int i = 0; i < 500; ++i) {
        const Rational r = s.draw_nonzero();
        REQUIRE_FALSE(r.is_zero());
        REQUIRE(abs(r.value().get_num()) <= 3);
        REQUIRE(r.value().get_den() <= 3);
    }
    CHECK_THROWS_AS(s.draw([](const Rational&) { return false; }), SamplingExhausted);
}

TEST_CASE("sample() returns accepted values and validates its config") {
    FieldConfig cfg;
    cfg.kind = FieldKind::ExactRational;
    cfg.sample_bound = 1;
    const auto v = sample(RationalField{}, cfg, 20, [](const Rational& r) { return !r.is_zero(); });
    CHECK(v.size() == 20);
    for (const auto& r : v) CHECK((r == q(1) || r == q(-1)));
    cfg.sample_bound = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    FieldConfig bad;
    bad.modulus = 91;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// matrices

TEST_CASE("2x2 matrix product, determinant and inverse") {
    using M = SquareMatrix<Rational>;
    const M a{{q(1), q(2)}, {q(3), q(4)}};
    const M b{{q(0), q(1)}, {q(1), q(0)}};
    CHECK(a * b == M{{q(2), q(1)}, {q(4), q(3)}});
    CHECK(a.det() == q(-2));
    CHECK(a.inverse() == M{{q(-2), q(1)}, {q(3, 2), q(-1, 2)}});
    CHECK(a * a.inverse() == M::identity(2, q(1)));
    CHECK_THROWS_AS((M{{q(1), q(2)}, {q(2), q(4)}}.inverse()), SingularMatrix);
    CHECK(as_matrix(std::vector<Rational>{q(1), q(2), q(3), q(4)}) == a);
    CHECK_THROWS(as_matrix(std::vector<Rational>{q(1), q(2), q(3)}));
}

TEST_CASE("random matrix identities hold") {
    const PrimeField f;
    Sampler<PrimeField> s(f, 1, derive_rng(3, 0));
    for (std::size_t n : {1u, 2u, 3u}) {
        for (int i = 0; i < 200; ++i) {
            auto draw = [&] {
                std::vector<Fp> e;
                for (std::size_t k = 0; k < n * n; ++k) e.push_back(s.draw());
                return SquareMatrix<Fp>(n, e);
            };
            const auto a = draw(), b = draw();
            REQUIRE((a * b).det() == a.det() * b.det());
            if (!a.det().is_zero()) {
                REQUIRE(a * a.inverse() == SquareMatrix<Fp>::identity(n, f.one()));
                REQUIRE(a.inverse() * a == SquareMatrix<Fp>::identity(n, f.one()));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// quasigroups

TEST_CASE("builtin quasigroups satisfy the laws they claim") {
    const auto ctx = testing::fp_ctx(300);
    for (const std::string name :
         {"additive", "multiplicative", "division", "subtraction_loop", "matrix_reversed", "matrix_reversed(3)"}) {
        INFO(name);
        const auto qg = builtin_quasigroup(ctx.field, name);
        const auto rep = check_axioms(qg, ctx);
        CHECK(rep.claims_hold());
        CHECK(rep.law("left_division_cancel").report.passed());
        CHECK(rep.law("left_identity").report.passed());
    }
}

TEST_CASE("left-only structures are reported as such") {
    const auto ctx = testing::fp_ctx(100);
    const auto sub = check_axioms(subtraction_quasigroup(ctx.field), ctx);
    CHECK(sub.law("right_identity").report.verdict == Verdict::Fail);
    CHECK(sub.law("associativity").report.verdict == Verdict::Fail);
    const auto div = check_axioms(division_quasigroup(ctx.field), ctx);
    CHECK(div.law("right_identity").report.verdict == Verdict::Fail);
    const auto add = check_axioms(additive_group(ctx.field), ctx);
    CHECK(add.law("associativity").report.passed());
    CHECK(add.law("commutativity").report.passed());
    const auto mat = check_axioms(matrix_reversed(ctx.field, 2), ctx);
    CHECK(mat.law("commutativity").report.verdict == Verdict::Fail);
}

TEST_CASE("division quasigroup on small values") {
    const RationalField f;
    const auto d = division_quasigroup(f);
    CHECK(d.op({q(2)}, {q(6)}) == std::vector<Rational>{q(3)});
    CHECK(d.ldiv({q(2)}, {q(3)}) == std::vector<Rational>{q(6)});
    const auto s = subtraction_quasigroup(f);
    CHECK(s.op({q(2)}, {q(7)}) == std::vector<Rational>{q(5)});
    CHECK(s.ldiv({q(2)}, {q(5)}) == std::vector<Rational>{q(7)});
}

TEST_CASE("unknown quasigroup names are rejected") {
    const RationalField f;
    CHECK_THROWS_AS(builtin_quasigroup(f, "nope"), UnknownQuasigroup);
    CHECK_THROWS_AS(builtin_quasigroup(f, "matrix_reversed(0)"), UnknownQuasigroup);
    CHECK_THROWS_AS(builtin_quasigroup(f, "matrix_reversed(x)"), UnknownQuasigroup);
    CHECK(builtin_quasigroup(f, "matrix_reversed(3)").carrier.dim == 9);
}

// ---------------------------------------------------------------------------
// engine

namespace {

// Fails whenever the first draw is even, poles whenever it is divisible by 7.
Trial<PrimeField> parity_trial() {
    return [](Sampler<PrimeField>& s) -> std::optional<Witness> {
        const Fp x = s.draw();
        if (x.value() % 7 == 0) throw DivisionByZero();
        if (x.value() % 2 == 0) return Witness{x.to_string(), "even", "odd"};
        return std::nullopt;
    };
}

}  // namespace

TEST_CASE("run_trials gives the same report for any worker count") {
    auto ctx = testing::fp_ctx(400, 9);
    ctx.opt.jobs = 1;
    const auto one = run_trials(ctx, "parity", "x", 1, parity_trial());
    ctx.opt.jobs = 4;
    const auto four = run_trials(ctx, "parity", "x", 1, parity_trial());
    CHECK(one.failure_count == four.failure_count);
    CHECK(one.resampled == four.resampled);
    CHECK(one.used == 400);
    REQUIRE(one.failures.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(one.failures[i].inputs == four.failures[i].inputs);
    CHECK(one.verdict == Verdict::Fail);
    CHECK(one.resampled > 0);
}

TEST_CASE("samples that never leave the pole set are inconclusive") {
    auto ctx = testing::fp_ctx(10);
    ctx.opt.pole_budget = 3;
    const Trial<PrimeField> always = [](Sampler<PrimeField>&) -> std::optional<Witness> { throw SingularMatrix(); };
    const auto r = run_trials(ctx, "poles", "x", 1, always);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.exhausted == 10);
    CHECK(r.used == 0);
    CHECK(r.resampled == 30);
}

TEST_CASE("a single failure outweighs exhausted samples") {
    auto ctx = testing::fp_ctx(5);
    ctx.opt.pole_budget = 0;
    int calls = 0;
    const Trial<PrimeField> t = [&](Sampler<PrimeField>&) -> std::optional<Witness> {
        if (++calls == 1) return Witness{"", "a", "b"};
        throw DivisionByZero();
    };
    ctx.opt.jobs = 1;
    const auto r = run_trials(ctx, "mixed", "x", 1, t);
    CHECK(r.verdict == Verdict::Fail);
    CHECK(r.exhausted == 4);
}

TEST_CASE("non-pole errors propagate out of the workers") {
    auto ctx = testing::fp_ctx(8);
    ctx.opt.jobs = 3;
    const Trial<PrimeField> t = [](Sampler<PrimeField>&) -> std::optional<Witness> {
        throw IncompatibleStructure("bad");
    };
    CHECK_THROWS_AS(run_trials(ctx, "err", "x", 1, t), IncompatibleStructure);
    ctx.opt.samples = 0;
    CHECK_THROWS_AS(run_trials(ctx, "err", "x", 1, parity_trial()), std::invalid_argument);
}

TEST_CASE("merging partial reports") {
    auto ctx = testing::fp_ctx(50, 2);
    const auto a = run_trials(ctx, "parity", "x", 1, parity_trial());
    const auto b = run_trials(ctx.with_samples(20), "parity", "x", 1, parity_trial());
    const auto m = merge(a, b);
    CHECK(m.requested == 70);
    CHECK(m.failure_count == a.failure_count + b.failure_count);
    CHECK(m.failures.size() <= 5);
    CHECK(m.verdict == Verdict::Fail);
    const auto c = run_trials(ctx.with_samples(7), "parity", "x", 1, parity_trial());
    CHECK(merge(merge(a, b), c).failure_count == merge(a, merge(b, c)).failure_count);
}

TEST_CASE("reports serialize with every field") {
    const auto r = run_trials(testing::fp_ctx(20), "parity", "x", 1, parity_trial());
    const auto j = to_json(r);
    for (const char* k : {"identity", "subject", "field", "seed", "samples", "failure_count", "failures", "verdict", "confidence"}) {
        CHECK(j.contains(k));
    }
    CHECK(j["verdict"] == "fail");
}
