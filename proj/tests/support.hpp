#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "ybmap/ybmap.hpp"

namespace testing {

using ybmap::PrimeField;
using ybmap::Rational;
using ybmap::RationalField;

inline ybmap::Context<PrimeField> fp_ctx(std::size_t samples = 200, std::uint64_t seed = 1) {
    ybmap::VerifyOptions o;
    o.samples = samples;
    return ybmap::make_context(PrimeField{}, seed, o);
}

inline ybmap::Context<RationalField> q_ctx(std::size_t samples = 50, std::uint64_t seed = 1) {
    ybmap::VerifyOptions o;
    o.samples = samples;
    return ybmap::make_context(RationalField{}, seed, o);
}

inline Rational q(long n, long d = 1) { return Rational::fraction(n, d); }

inline ybmap::Point<RationalField> qp(std::initializer_list<Rational> v) { return {v}; }

}  // namespace testing
