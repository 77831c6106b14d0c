#include "doctest.h"
#include "golden.hpp"
#include "oracles.hpp"
#include "optcyc/analysis.hpp"
#include "optcyc/errors.hpp"

using namespace optcyc;

namespace {

TowerPtr tower(std::uint32_t q) {
  const auto pm = factor_prime_power(q);
  REQUIRE(pm);
  return std::make_shared<const FieldTower>(FieldTower::build(pm->first, pm->second));
}

WeightDistribution primal(std::uint32_t q) { return enumerate_code(*build_central_code(tower(q))); }

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("Griesmer bound") {
  CHECK(griesmer_bound(5, 3, 4) == 6);
  CHECK(griesmer_bound(2, 3, 1) == 3);
  CHECK(griesmer_bound(7, 5, 4) == 8);
  for (std::uint64_t q = 3; q <= 64; ++q) {
    if (!factor_prime_power(q)) continue;
    CAPTURE(q);
    CHECK(griesmer_bound(q, 3, q - 1) == q + 1);
    CHECK(griesmer_bound(q, q - 2, 4) == q + 1);
  }
}

TEST_CASE("Krawtchouk values") {
  CHECK(krawtchouk(6, 5, 4, 6) == 15);
  CHECK(krawtchouk(4, 2, 0, 3) == 1);
  for (std::int64_t q : {2, 3, 4, 5, 7}) {
    for (std::int64_t j = 0; j <= q + 1; ++j)
      for (std::int64_t x = 0; x <= q + 1; ++x) CHECK(krawtchouk(q + 1, q, j, x) == oracle::krawtchouk(q + 1, q, j, x));
  }
}

TEST_CASE("Krawtchouk closed forms") {
  for (std::int64_t q = 3; q <= 16; ++q) {
    if (!factor_prime_power(static_cast<std::uint64_t>(q))) continue;
    for (std::int64_t j = 4; j <= q + 1; ++j) {
      for (std::int64_t x : {std::int64_t{0}, q - 1, q, q + 1}) {
        CAPTURE(q);
        CAPTURE(j);
        CAPTURE(x);
        const auto v = krawtchouk_closed_form(q, j, x);
        REQUIRE(v);
        CHECK(*v == oracle::krawtchouk(q + 1, q, j, x));
      }
    }
  }
  CHECK_FALSE(krawtchouk_closed_form(5, 4, 2));
}

TEST_CASE("Pless identities") {
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    const auto d = primal(q);
    const auto low = pless_solve_dual(q, d);
    CHECK(low.a2 == 0);
    CHECK(low.a3 == 0);
    CHECK(low.a4 == a4_dual(q));
    for (unsigned r = 0; r <= 4; ++r) CHECK(pless_identity_holds(d, low, q, 3, r));
    DualLowWeights off = low;
    off.a4 += 1;
    CHECK_FALSE(pless_identity_holds(d, off, q, 3, 4));
  }
  const auto [lo, hi] = pless_solve_primal(7);
  CHECK(lo == 168);
  CHECK(hi == 126);
  CHECK(pless_solve_primal(8) == std::pair<BigInt, BigInt>{252, 196});
  CHECK(pless_identity_holds(primal(7), {0, 0, 420}, 7, 3, 4));
  WeightDistribution zero(6);
  zero.counts[0] = 1;
  CHECK(pless_identity_holds(zero, {0, 0, 0}, 5, 0, 0));
  CHECK_THROWS_AS(pless_solve_dual(2, primal(2)), Error);
}

TEST_CASE("MacWilliams transform") {
  for (auto [q, text] : golden::kDual) {
    CAPTURE(q);
    const auto d = dual_distribution_transform(primal(q), q, 3);
    CHECK(format_enumerator(d) == text);
    CHECK(format_enumerator(dual_distribution_closed_form(q)) == text);
  }
  // zero code maps to the full space
  WeightDistribution zero(4);
  zero.counts[0] = 1;
  const auto full = dual_distribution_transform(zero, 3, 0);
  for (std::size_t j = 0; j <= 4; ++j) CHECK(full.counts[j] == binomial(4, static_cast<std::int64_t>(j)) * pow_big(2, static_cast<unsigned>(j)));
  // something that is not a code distribution
  WeightDistribution bogus(4);
  bogus.counts = {1, 1, 0, 0, 0};
  CHECK_THROWS_WITH_AS(dual_distribution_transform(bogus, 3, 1), doctest::Contains("InexactDivision"), Error);
}

TEST_CASE("closed-form dual distribution") {
  CHECK(dual_distribution_closed_form(9).counts[10] == 1472928);
  CHECK(dual_distribution_closed_form(4).counts[5] == 0);
  CHECK(dual_distribution_closed_form(3).counts[4] == 2);
  CHECK(a4_dual(8) == 882);
  CHECK(a4_dual(2) == 0);
  CHECK(a5_dual(4) == 0);
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 64u}) {
    CAPTURE(q);
    const auto d = dual_distribution_closed_form(q);
    CHECK(d.total() == pow_big(q, q - 2));
    CHECK(d.counts[4] == a4_dual(q));
    if (q >= 4) CHECK(d.counts[5] == a5_dual(q));
    if (q >= 5) CHECK(d.nonzero_weights().size() == q - 2);
  }
  CHECK_THROWS_AS(dual_distribution_closed_form(2), Error);
}

TEST_CASE("positivity inequality") {
  for (std::int64_t q = 5; q <= 64; ++q) {
    if (!factor_prime_power(static_cast<std::uint64_t>(q))) continue;
    for (std::int64_t j = 4; j <= q + 1; ++j) {
      const BigInt lhs = 2 * pow_big(q - 1, static_cast<unsigned>(j - 1));
      const BigInt inner = (j - 1) * BigInt(q) * ((j - 2) * BigInt(q) - 2) + 2;
      CHECK(lhs > boost::multiprecision::abs(inner));
    }
    CHECK(dual_distribution_closed_form(static_cast<std::uint64_t>(q)).counts[static_cast<std::size_t>(q + 1)] > 0);
  }
}

TEST_CASE("irreducible classification") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    const auto t = tower(q);
    const auto odd = classify_irreducible(*t, q + 1);
    CHECK(odd.u == (q % 2 ? 2u : 1u));
    CHECK(odd.dimension == 2);
    CHECK(odd.tag == (q % 2 ? IrreducibleClassTag::SemiprimitiveTwoWeight : IrreducibleClassTag::OneWeightDim2));
    const auto one = classify_irreducible(*t, 1);
    CHECK(one.u == q + 1);
    CHECK(one.dimension == 1);
    CHECK(format_enumerator(one.predicted) == (q == 2 ? std::string("1+z") : "1+" + std::to_string(q - 1) + "z"));
    CHECK_THROWS_AS(classify_irreducible(*t, q * q), Error);
  }
  CHECK(to_string(IrreducibleClassTag::SemiprimitiveTwoWeight) == "semiprimitive two-weight, dimension 2");
}

TEST_CASE("primal closed form and distance helpers") {
  for (auto [q, text] : golden::kPrimal) CHECK(format_enumerator(expected_enumerator_primal(q)) == text);
  for (std::uint32_t q : {2u, 3u, 4u, 11u, 13u, 16u}) {
    CAPTURE(q);
    const auto d = primal(q);
    CHECK(d == expected_enumerator_primal(q));
    CHECK(d.total() == pow_big(q, 3));
    CHECK(dimension_from_distribution(d, q) == 3);
  }
  CHECK(min_distance(primal(9)) == 8);
  CHECK(min_distance(dual_distribution_closed_form(5)) == 4);
  WeightDistribution zero(3);
  zero.counts[0] = 1;
  CHECK_THROWS_WITH_AS(min_distance(zero), doctest::Contains("ZeroCode"), Error);
  CHECK(min_distance(primal(2)) == 1);
  WeightDistribution bad(2);
  bad.counts = {1, 2, 0};
  CHECK_THROWS_AS(dimension_from_distribution(bad, 2), Error);
}

TEST_CASE("length optimality") {
  const auto t = tower(7);
  const CodePtr code = build_central_code(t);
  CHECK(is_length_optimal(*code, 6));
  CHECK(is_length_optimal(*dual_code(code), 4));
  CHECK_FALSE(is_length_optimal(*code, 5));
}
