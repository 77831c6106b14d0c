#pragma once

// Exact counting for the C(1, q+1, q^2) family and its dual: Griesmer bound,
// the first five Pless power moments, Krawtchouk polynomials and the
// MacWilliams transform, closed-form distributions, and classification of
// the dimension-2 irreducible codes. No floating point anywhere.

#include "optcyc/bigint.hpp"
#include "optcyc/code_builder.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace optcyc {

/// C(a, b), zero outside 0 <= b <= a.
BigInt binomial(std::int64_t a, std::int64_t b);

/// Σ_{i<k} ceil(d / q^i).
BigInt griesmer_bound(std::uint64_t q, std::uint64_t k, std::uint64_t d);
/// n equals the Griesmer bound for (q, k, d).
bool is_length_optimal(const CodeHandle& code, std::uint64_t d);

/// K_j^{n,q}(x) = Σ_l (-1)^l (q-1)^{j-l} C(x, l) C(n-x, j-l).
BigInt krawtchouk(std::int64_t n, std::int64_t q, std::int64_t j, std::int64_t x);

/// Closed forms of K_j^{q+1,q}(x) for x in {0, q-1, q, q+1}; nullopt for
/// other x. Division is asserted exact (InexactDivision).
std::optional<BigInt> krawtchouk_closed_form(std::int64_t q, std::int64_t j, std::int64_t x);

/// Σ_{i>=1} i^r A_i.
BigInt power_moment(const WeightDistribution& dist, unsigned r);

struct DualLowWeights {
  BigInt a2, a3, a4;
  friend bool operator==(const DualLowWeights&, const DualLowWeights&) = default;
};

/// Right-hand side of the r-th Pless identity (r = 0..4) scaled by q^r, so
/// that the identity reads q^r * power_moment(r) == pless_rhs_scaled(r).
BigInt pless_rhs_scaled(const DualLowWeights& dual, std::uint64_t q, unsigned k, std::uint64_t n, unsigned r);
/// Checks identity r with m = n(q-1); assumes A_1^⊥ = 0.
bool pless_identity_holds(const WeightDistribution& primal, const DualLowWeights& dual, std::uint64_t q, unsigned k,
                          unsigned r);

/// (A_{q-1}, A_{q+1}) of C(1,q+1,q^2) from the first two identities with
/// A_q = q^2 - 1. Throws SingularSystem / NonIntegerSolution.
std::pair<BigInt, BigInt> pless_solve_primal(std::uint64_t q);
/// (A_2^⊥, A_3^⊥, A_4^⊥) from identities 3-5 given the primal distribution
/// of an [n, k] code with Σ A_i = q^k. q = 2 is rejected (InvalidArgument).
DualLowWeights pless_solve_dual(std::uint64_t q, const WeightDistribution& primal);

/// MacWilliams transform A_j^⊥ = q^{-k} Σ_i A_i K_j(i). Throws
/// InexactDivision on non-integral or negative output.
WeightDistribution dual_distribution_transform(const WeightDistribution& dist, std::uint64_t q, unsigned k);

/// Closed-form dual distribution of C(1,q+1,q^2) for q >= 3.
WeightDistribution dual_distribution_closed_form(std::uint64_t q);

/// q(q^2-1)(q-1)(q-2)/24
BigInt a4_dual(std::uint64_t q);
/// (q^2-1)q(q-1)(q-2)(q-3)(q-4)/120
BigInt a5_dual(std::uint64_t q);

enum class IrreducibleClassTag { OneWeightDim1, OneWeightDim2, SemiprimitiveTwoWeight };
std::string_view to_string(IrreducibleClassTag tag) noexcept;

struct IrreducibleClass {
  std::uint32_t u = 0;  // gcd(q+1, (q^2-1)/n)
  IrreducibleClassTag tag = IrreducibleClassTag::OneWeightDim1;
  unsigned dimension = 0;
  WeightDistribution predicted;
};

/// Predicted weight distribution of C(n, q^2); throws NotADivisor.
IrreducibleClass classify_irreducible(const FieldTower& tower, std::uint32_t n);

/// 1 + q(q^2-1)/2 z^{q-1} + (q^2-1) z^q + q(q-1)^2/2 z^{q+1}
WeightDistribution expected_enumerator_primal(std::uint64_t q);

/// Smallest i >= 1 with A_i > 0; throws ZeroCode.
std::size_t min_distance(const WeightDistribution& dist);

/// k with Σ A_i = q^k; throws InvalidArgument when the total is not a power of q.
unsigned dimension_from_distribution(const WeightDistribution& dist, std::uint64_t q);

}  // namespace optcyc
