#include "doctest.h"
#include "golden.hpp"
#include "oracles.hpp"
#include "optcyc/analysis.hpp"
#include "optcyc/code_builder.hpp"
#include "optcyc/errors.hpp"

#include <random>

using namespace optcyc;

namespace {

TowerPtr tower(std::uint32_t q) {
  const auto pm = factor_prime_power(q);
  REQUIRE(pm);
  return std::make_shared<const FieldTower>(FieldTower::build(pm->first, pm->second));
}

TowerPtr tower_with(std::uint32_t p, std::uint32_t m, const char* base, const char* top) {
  TowerOptions opt;
  if (base) opt.base_modulus = parse_coeffs(base);
  opt.top_modulus = parse_coeffs(top);
  return std::make_shared<const FieldTower>(FieldTower::build(p, m, opt));
}

std::vector<unsigned> codes(const Codeword& w) {
  std::vector<unsigned> v;
  for (auto s : w) v.push_back(s.code);
  return v;
}

}  // namespace

TEST_CASE("trace words of the worked examples") {
  const auto t7 = tower_with(7, 1, nullptr, "3,6,1");
  CHECK(codes(irr_codeword(*t7, 8, Fq2Element::from_log(0))) == golden::kQ7Gamma0);
  CHECK(codes(irr_codeword(*t7, 8, Fq2Element::from_log(1))) == golden::kQ7Gamma1);

  const auto t8 = tower_with(2, 3, "1,1,0,1", "3,1,1");
  CHECK(codes(irr_codeword(*t8, 9, Fq2Element::from_log(0))) == golden::kQ8Gamma0);
  CHECK(codes(irr_codeword(*t8, 9, Fq2Element::from_log(1))) == golden::kQ8Gamma1);

  CHECK(occr({2}, irr_codeword(*t7, 8, Fq2Element::from_log(0))) == 1);
  CHECK(occr({3}, irr_codeword(*t7, 8, Fq2Element::from_log(0))) == 2);
  CHECK(ssymb(irr_codeword(*t7, 8, Fq2Element::from_log(1))).size() == 4);
}

TEST_CASE("trace words agree with slow tower") {
  for (std::uint32_t q : {3u, 4u, 5u, 8u, 9u}) {
    CAPTURE(q);
    const auto t = tower(q);
    oracle::SlowFq f(t->p(), t->base_modulus());
    oracle::SlowFq2 slow{f, t->top_modulus()[0], t->top_modulus()[1]};
    for (std::uint32_t n : {q + 1, q - 1, q * q - 1}) {
      for (std::uint32_t b = 0; b < 5; ++b) {
        CHECK(codes(irr_codeword(*t, n, Fq2Element::from_log(b))) == oracle::trace_word(slow, n, b));
      }
    }
  }
}

TEST_CASE("irreducible and reducible codewords") {
  const auto t = tower(5);
  CHECK_THROWS_WITH_AS(irr_codeword(*t, 7, t->one()), doctest::Contains("NotADivisor"), Error);
  CHECK(hamming_weight(irr_codeword(*t, 6, Fq2Element())) == 0);
  CHECK(reducible_length(*t, 1, 6) == 6);
  CHECK(reducible_length(*t, 4, 6) == 12);
  CHECK_THROWS_WITH_AS(reducible_length(*t, 6, 6), doctest::Contains("InvalidDivisorPair"), Error);
  CHECK_THROWS_WITH_AS(reducible_length(*t, 1, 4), doctest::Contains("InvalidDivisorPair"), Error);
  // α = 1, β = 0 gives the all-ones word
  CHECK(red_codeword(*t, 1, 6, {1}, Fq2Element()) == Codeword(6, FqElement{1}));
  const auto w = red_codeword(*t, 1, 6, {2}, t->one());
  const auto c = irr_codeword(*t, 6, t->one());
  for (std::size_t i = 0; i < 6; ++i) CHECK(w[i] == t->base().add({2}, c[i]));
}

TEST_CASE("central code generator and dual") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    CAPTURE(q);
    const auto t = tower(q);
    const CodePtr code = build_central_code(t);
    CHECK(code->n() == q + 1);
    CHECK(code->k() == 3);
    CHECK(code->describe() == "C(1," + std::to_string(q + 1) + "," + std::to_string(q * q) + ")");
    CHECK(is_cyclic(*code));
    const CodePtr dual = dual_code(code);
    CHECK(dual->k() == q - 2);
    CHECK(dual->describe() == "dual of " + code->describe());
    for (const auto& a : dual->generator().row_list())
      for (const auto& b : code->generator().row_list()) CHECK(dot(t->base(), a, b).is_zero());
    if (q >= 3) {
      CHECK(is_cyclic(*dual));
      // biduality: the dual of the dual spans the primal
      const CodePtr back = dual_code(dual);
      CHECK(back->k() == 3);
      for (const auto& r : back->generator().row_list()) CHECK(in_row_space(t->base(), code->generator(), r));
    }
  }
}

TEST_CASE("irreducible code dimensions") {
  const auto t = tower(5);
  for (std::uint32_t n : {1u, 2u, 3u, 4u, 6u, 8u, 12u, 24u}) {
    CAPTURE(n);
    const CodePtr c = build_code(t, IrreducibleKind{n});
    CHECK(c->k() == multiplicative_order(n, 5));
    CHECK(is_cyclic(*c));
  }
  CHECK(multiplicative_order(6, 5) == 2);
  CHECK(multiplicative_order(4, 5) == 1);
  CHECK_THROWS_AS(build_code(t, IrreducibleKind{5}), Error);
}

TEST_CASE("enumeration") {
  const auto t = tower(5);
  const CodePtr code = build_central_code(t);
  const auto dist = enumerate_code(*code);
  CHECK(format_enumerator(dist) == golden::kPrimal.at(5));
  CHECK(dist.total() == 125);
  CHECK(dist.nonzero_weights() == std::vector<std::size_t>{4, 5, 6});
  // row-space walk agrees with the (α, β) parameterization
  CHECK(enumerate_row_space(t->base(), code->generator(), 1000) == dist);
  CHECK_THROWS_WITH_AS(enumerate_code(*code, 100), doctest::Contains("EnumerationTooLarge"), Error);

  std::size_t seen = 0;
  for_each_codeword(t->base(), code->generator(), 200, [&](const Codeword&) { ++seen; });
  CHECK(seen == 125);

  std::size_t params = 0;
  for_each_parameterized(*code, [&](FqElement a, Fq2Element b, const Codeword& w) {
    ++params;
    CHECK(w == red_codeword(*t, 1, 6, a, b));
  });
  CHECK(params == 125);
  CHECK_THROWS_AS(for_each_parameterized(*dual_code(code), [](FqElement, Fq2Element, const Codeword&) {}), Error);
}

TEST_CASE("enumerator formatting") {
  WeightDistribution d(4);
  d.counts = {1, 3, 0, 1, 0};
  CHECK(format_enumerator(d) == "1+3z+z^3");
  WeightDistribution zero(3);
  zero.counts[0] = 1;
  CHECK(format_enumerator(zero) == "1");
}

TEST_CASE("generator and parity-check polynomials") {
  const auto t = tower(7);
  const BaseField& f = t->base();
  const CodePtr code = build_central_code(t);
  const FqPoly g = generator_polynomial(*code);
  const FqPoly h = parity_check_polynomial(*code);
  CHECK(g.degree() == 5);
  CHECK(h.degree() == 3);
  CHECK(poly_mul(f, g, h) == FqPoly::x_n_minus_1(f, 8));
  // g generates the code: its shifts are codewords
  const Codeword gw = polynomial_to_codeword(g, 8);
  for (int s = 0; s < 8; ++s) CHECK(in_row_space(f, code->generator(), cyclic_shift(gw, s)));
  const CodePtr dual = dual_code(code);
  CHECK(generator_polynomial(*dual).degree() == 3);

  // a non-cyclic row space
  const FqMatrix m = FqMatrix::from_rows({Codeword{{1}, {0}, {0}, {0}, {0}, {0}, {0}, {0}}}, 8);
  const CodePtr odd = std::make_shared<const CodeHandle>(t, IrreducibleKind{8}, m);
  CHECK_FALSE(is_cyclic(*odd));
  CHECK_THROWS_WITH_AS(generator_polynomial(*odd), doctest::Contains("NotCyclic"), Error);
}

TEST_CASE("syndrome decoding") {
  const auto t = tower(5);
  const BaseField& f = t->base();
  const CodePtr code = build_central_code(t);
  const CodePtr dual = dual_code(code);
  const Codeword word = add_words(f, dual->generator().row(0), scalar_mul(f, {3}, dual->generator().row(2)));

  const auto clean = syndrome_decode(*dual, word);
  CHECK(clean.verdict == DecodeVerdict::Clean);
  CHECK(clean.word == word);

  Codeword one = word;
  one[4] = f.add(one[4], {2});
  const auto fixed = syndrome_decode(*dual, one);
  CHECK(fixed.verdict == DecodeVerdict::Corrected);
  CHECK(fixed.position == 4);
  CHECK(fixed.magnitude == FqElement{2});
  CHECK(fixed.word == word);

  Codeword two = one;
  two[0] = f.add(two[0], {1});
  CHECK(syndrome_decode(*dual, two).verdict == DecodeVerdict::Detected);

  CHECK(to_string(DecodeVerdict::Corrected) == "Corrected");
  CHECK_THROWS_WITH_AS(syndrome_decode(*dual, Codeword(5)), doctest::Contains("LengthMismatch"), Error);
  CHECK_THROWS_AS(syndrome_decode(*code, word), Error);
}

TEST_CASE("q = 2 degenerate case") {
  const auto t = tower(2);
  const CodePtr code = build_central_code(t);
  CHECK(code->n() == 3);
  CHECK(code->k() == 3);
  const auto dist = enumerate_code(*code);
  CHECK(dist.total() == 8);
  CHECK(format_enumerator(dist) == "1+3z+3z^2+z^3");
  const CodePtr dual = dual_code(code);
  CHECK(dual->k() == 0);
  CHECK(format_enumerator(enumerate_code(*dual)) == "1");
}
