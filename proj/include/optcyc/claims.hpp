#pragma once

// Registry of computational checks over one field F_q, each producing a
// ClaimReport. Ids are stable and shared with the CLI (--claims):
//
//   Prop1           trace vanishing on the (q+1)/2 coset (odd q) or on F_q (even q)
//   Prop2           equal traces along a (q-1)-step orbit iff (q+1) | (2j+t-b)
//   Prop3a..Prop3f  symbol occurrence counts in C(q+1, q^2)
//   Prop4           number of weight-q words α·1 + c(β)
//   Prop5           A_q = q^2-1 and support {0, q-1, q, q+1}
//   Thm2            predicted vs enumerated distribution for every n | q^2-1
//   Thm3            primal enumerator, three weights, Griesmer optimality
//   Thm4            dual parameters [q+1, q-2, 4], A_4^⊥, optimality
//   Eq1             Pless power moments
//   Eq2             MacWilliams transform vs brute force, and involution
//   Eq3             closed-form dual distribution vs transform
//   Eq3-positivity  all A_j^⊥ > 0 on 4..q+1 for q >= 5
//   Krawtchouk      closed forms at x in {0, q-1, q, q+1}
//   Rem1            parity-check polynomials of the irreducible and central codes
//   Rem2            A_5^⊥ formula; q = 4 dual is one-weight [5,2]
//   Decode          dual corrects one error and detects two

#include "optcyc/code_builder.hpp"
#include "optcyc/gf_tower.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace optcyc {

inline constexpr int kClaimRegistryVersion = 1;

/// All claim ids in report (lexicographic) order.
std::span<const std::string_view> claim_ids() noexcept;

enum class ClaimStatus { Verified, Failed, Skipped };
std::string_view to_string(ClaimStatus s) noexcept;

struct ClaimReport {
  std::string id;
  std::uint32_t q = 0;
  ClaimStatus status = ClaimStatus::Skipped;
  /// Checked cardinalities when Verified, reason when Skipped.
  std::string detail;
  /// Counterexample; set iff Failed.
  std::optional<std::string> witness;
  std::chrono::microseconds elapsed{0};
};

struct ClaimOptions {
  std::uint64_t dual_enumeration_cap = kDefaultDualEnumerationCap;
  /// Upper bound on inner-loop iterations for the exhaustive checks.
  std::uint64_t max_work = 500'000'000;
  bool parallel = true;
};

/// Runs the requested claims (all when scope is empty); reports come back
/// sorted by id. Throws InvalidArgument for unknown ids.
std::vector<ClaimReport> verify_claims(const TowerPtr& tower, std::span<const std::string> scope = {},
                                       const ClaimOptions& options = {});
/// Same, over the default tower for q.
std::vector<ClaimReport> verify_claims(std::uint32_t q, std::span<const std::string> scope = {},
                                       const ClaimOptions& options = {});

}  // namespace optcyc
