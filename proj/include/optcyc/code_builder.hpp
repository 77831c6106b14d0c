#pragma once

// Trace-evaluation cyclic codes over F_q built from a field tower:
//
//   irreducible  C(n, q^2)      c(β)   = (Tr(β γ^{((q^2-1)/n) i}))_i
//   reducible    C(n1, n2, q^2) c(α,β) = (α (γ^{q+1})^{((q-1)/n1) i} + Tr(β γ^{((q^2-1)/n2) i}))_i
//
// The central instance is C(1, q+1, q^2): length q+1, dimension 3, nonzero
// weights q-1, q, q+1. Its dual has length q+1, dimension q-2 and minimum
// distance 4 for q >= 3, and syndrome_decode() runs radius-1 decoding on it.

#include "optcyc/bigint.hpp"
#include "optcyc/fq_linalg.hpp"
#include "optcyc/gf_tower.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace optcyc {

class CodeHandle;
using CodePtr = std::shared_ptr<const CodeHandle>;
using TowerPtr = std::shared_ptr<const FieldTower>;

struct IrreducibleKind {
  std::uint32_t n;
};
struct ReducibleKind {
  std::uint32_t n1;
  std::uint32_t n2;
};
struct DualKind {
  CodePtr primal;
};
using CodeKind = std::variant<IrreducibleKind, ReducibleKind, DualKind>;

class CodeHandle {
 public:
  CodeHandle(TowerPtr tower, CodeKind kind, FqMatrix generator)
      : tower_(std::move(tower)), kind_(std::move(kind)), generator_(std::move(generator)) {}

  const FieldTower& tower() const noexcept { return *tower_; }
  const TowerPtr& tower_ptr() const noexcept { return tower_; }
  std::size_t n() const noexcept { return generator_.cols(); }
  std::size_t k() const noexcept { return generator_.rows(); }
  const CodeKind& kind() const noexcept { return kind_; }
  /// k x n, full row rank.
  const FqMatrix& generator() const noexcept { return generator_; }
  /// e.g. "C(1,6,25)" or "dual of C(1,6,25)".
  std::string describe() const;

 private:
  TowerPtr tower_;
  CodeKind kind_;
  FqMatrix generator_;
};

/// Exact histogram A_0..A_n.
struct WeightDistribution {
  std::size_t n = 0;
  std::vector<BigInt> counts;

  WeightDistribution() = default;
  explicit WeightDistribution(std::size_t length) : n(length), counts(length + 1) {}

  BigInt total() const;
  /// Weights i >= 1 with A_i != 0, ascending.
  std::vector<std::size_t> nonzero_weights() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// "1+60z^4+24z^5+40z^6": ascending powers, zero counts omitted.
std::string format_enumerator(const WeightDistribution& dist);

/// ord_n(q); n must be coprime to q.
std::uint32_t multiplicative_order(std::uint64_t n, std::uint64_t q);

/// Throws NotADivisor unless n | q^2 - 1.
Codeword irr_codeword(const FieldTower& tower, std::uint32_t n, Fq2Element beta);

/// Length of C(n1, n2, q^2); throws InvalidDivisorPair.
std::uint32_t reducible_length(const FieldTower& tower, std::uint32_t n1, std::uint32_t n2);
Codeword red_codeword(const FieldTower& tower, std::uint32_t n1, std::uint32_t n2, FqElement alpha,
                      Fq2Element beta);

CodePtr build_code(TowerPtr tower, const CodeKind& kind);
/// C(1, q+1, q^2).
CodePtr build_central_code(TowerPtr tower);
/// Generator is the canonical null-space basis of the primal generator.
CodePtr dual_code(const CodePtr& code);

/// Every cyclic shift of every generator row stays in the row space.
bool is_cyclic(const CodeHandle& code);

inline constexpr std::uint64_t kDefaultPrimalEnumerationCap = std::uint64_t{1} << 25;
inline constexpr std::uint64_t kDefaultDualEnumerationCap = 100'000'000;

using ParameterVisitor = std::function<void(FqElement alpha, Fq2Element beta, const Codeword& word)>;

/// Streams (α, β, c(α, β)) over α in F_q and β in F_{q^2} for trace-defined
/// codes (α is always zero for irreducible kinds). Throws InvalidArgument for
/// dual codes and EnumerationTooLarge past max_words.
void for_each_parameterized(const CodeHandle& code, const ParameterVisitor& visit,
                            std::uint64_t max_words = kDefaultPrimalEnumerationCap);

/// Visits every vector of the row space of a full-rank generator exactly once.
void for_each_codeword(const BaseField& field, const FqMatrix& generator, std::uint64_t max_words,
                       const std::function<void(const Codeword&)>& visit);

/// Exact weight distribution by brute force. Reducible codes go through the
/// (α, β) parameterization, other codes through all generator combinations.
/// Default cap: 2^25 words, or 10^8 for duals.
WeightDistribution enumerate_code(const CodeHandle& code, std::optional<std::uint64_t> max_words = std::nullopt);
WeightDistribution enumerate_row_space(const BaseField& field, const FqMatrix& generator, std::uint64_t max_words);

std::set<FqElement> ssymb(const Codeword& v);
std::size_t occr(FqElement s, const Codeword& v) noexcept;

/// Monic gcd of the generator rows (as polynomials) and x^n - 1; throws
/// NotCyclic when its degree is not n - k.
FqPoly generator_polynomial(const CodeHandle& code);
/// (x^n - 1) / g(x).
FqPoly parity_check_polynomial(const CodeHandle& code);

enum class DecodeVerdict { Clean, Corrected, Detected };
std::string_view to_string(DecodeVerdict v) noexcept;

struct DecodeResult {
  DecodeVerdict verdict = DecodeVerdict::Clean;
  std::size_t position = 0;
  FqElement magnitude{};
  /// Received word for Clean/Detected, corrected word for Corrected.
  Codeword word;
};

/// Radius-1 bounded-distance decoding of a dual code, with the primal
/// generator as parity-check matrix. Throws LengthMismatch, InvalidArgument
/// (not a dual handle).
DecodeResult syndrome_decode(const CodeHandle& dual, const Codeword& received);

}  // namespace optcyc
