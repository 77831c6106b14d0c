#pragma once

// Two-level finite field tower F_p ⊂ F_q ⊂ F_{q^2}.
//
// F_q = F_p[x]/(base modulus) and F_{q^2} = F_q[y]/(top modulus). Subfield
// elements are stored by their coefficient digits over F_p (the element
// sum c_i x^i is the integer sum c_i p^i), which is also the printed symbol:
// over F_7 the symbol 3 is the residue 3, over F_8 = F_2(α) the symbol 6 is
// α^2 + α. Extension elements are stored as a discrete log to the fixed
// primitive element γ (the class of y), with a distinguished zero.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace optcyc {

/// Ascending-degree coefficient list; entries are subfield codes.
using CoeffList = std::vector<std::uint32_t>;

std::string format_coeffs(const CoeffList& coeffs);
/// Parses "3,6,1" (ascending degree). Throws Errc::InvalidArgument.
CoeffList parse_coeffs(const std::string& text);

bool is_prime(std::uint64_t n) noexcept;
/// Returns (p, m) with q = p^m, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> factor_prime_power(std::uint64_t q) noexcept;

struct FqElement {
  std::uint32_t code = 0;

  constexpr bool is_zero() const noexcept { return code == 0; }
  friend constexpr auto operator<=>(const FqElement&, const FqElement&) = default;
};

class Fq2Element {
 public:
  static constexpr std::uint32_t kZeroIndex = 0xFFFFFFFFu;

  /// The zero element.
  constexpr Fq2Element() = default;

  /// Element γ^index; index must already be reduced mod q^2 - 1.
  static constexpr Fq2Element from_log(std::uint32_t index) noexcept { return Fq2Element(index); }

  constexpr bool is_zero() const noexcept { return index_ == kZeroIndex; }
  /// Log-index to γ. Meaningless for zero.
  constexpr std::uint32_t log() const noexcept { return index_; }

  friend constexpr bool operator==(const Fq2Element&, const Fq2Element&) = default;

 private:
  constexpr explicit Fq2Element(std::uint32_t index) noexcept : index_(index) {}
  std::uint32_t index_ = kZeroIndex;
};

/// Arithmetic in F_q = F_p[x]/(modulus) through add/log tables.
class BaseField {
 public:
  /// Validates the modulus: monic, degree m, irreducible, and x primitive.
  BaseField(std::uint32_t p, std::uint32_t m, CoeffList modulus);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  const CoeffList& modulus() const noexcept { return modulus_; }

  FqElement add(FqElement a, FqElement b) const noexcept { return {add_[a.code * q_ + b.code]}; }
  FqElement neg(FqElement a) const noexcept { return {neg_[a.code]}; }
  FqElement sub(FqElement a, FqElement b) const noexcept { return add(a, neg(b)); }
  FqElement mul(FqElement a, FqElement b) const noexcept;
  FqElement inv(FqElement a) const;
  FqElement div(FqElement a, FqElement b) const { return mul(a, inv(b)); }
  FqElement pow(FqElement a, std::int64_t e) const;
  /// Image of the integer n in the prime subfield.
  FqElement from_int(std::int64_t n) const noexcept;

 private:
  std::uint32_t p_, m_, q_;
  CoeffList modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> exp_;  // α^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;  // inverse of exp_ on nonzero codes
};

/// First monic degree-m polynomial over F_p (ascending base-p order of its
/// low coefficients) that is irreducible with primitive root. For m = 1 this
/// is x - g with g the least primitive root mod p.
CoeffList find_base_modulus(std::uint32_t p, std::uint32_t m);

/// First monic quadratic y^2 + c1 y + c0 over the given F_q, ordered by
/// c0 + q c1, that is irreducible with primitive root.
CoeffList find_top_modulus(const BaseField& base);

struct TowerOptions {
  std::optional<CoeffList> base_modulus;
  std::optional<CoeffList> top_modulus;
  std::uint32_t max_q = 256;
};

struct SubfieldMembership {
  bool member = false;
  /// r with x = (γ^{q+1})^r; empty for zero or non-members.
  std::optional<std::uint32_t> subfield_log;
};

class FieldTower {
 public:
  /// Throws NonPrimeCharacteristic, ReducibleModulus, NonPrimitiveRoot, FieldTooLarge.
  static FieldTower build(std::uint32_t p, std::uint32_t m, const TowerOptions& options = {});

  const BaseField& base() const noexcept { return base_; }
  std::uint32_t p() const noexcept { return base_.p(); }
  std::uint32_t m() const noexcept { return base_.m(); }
  std::uint32_t q() const noexcept { return base_.q(); }
  /// |F_{q^2}^*| = q^2 - 1.
  std::uint32_t order() const noexcept { return order_; }
  const CoeffList& base_modulus() const noexcept { return base_.modulus(); }
  const CoeffList& top_modulus() const noexcept { return top_modulus_; }

  Fq2Element gamma_pow(std::int64_t exponent) const noexcept;
  Fq2Element one() const noexcept { return Fq2Element::from_log(0); }

  Fq2Element add(Fq2Element a, Fq2Element b) const noexcept;
  Fq2Element sub(Fq2Element a, Fq2Element b) const noexcept { return add(a, neg(b)); }
  Fq2Element neg(Fq2Element a) const noexcept;
  Fq2Element mul(Fq2Element a, Fq2Element b) const noexcept;
  /// Throws DivisionByZero.
  Fq2Element div(Fq2Element a, Fq2Element b) const;
  /// Negative exponents of zero throw DivisionByZero; 0^0 = 1.
  Fq2Element pow(Fq2Element a, std::int64_t exponent) const;

  /// x^q.
  Fq2Element frobenius(Fq2Element x) const noexcept;
  /// x + x^q, as a subfield element.
  FqElement trace(Fq2Element x) const noexcept;
  /// x^{q+1}, as a subfield element.
  FqElement norm(Fq2Element x) const noexcept;
  SubfieldMembership subfield_membership(Fq2Element x) const noexcept;

  Fq2Element embed(FqElement a) const noexcept;
  /// Inverse of embed; pre: subfield_membership(x).member.
  FqElement restrict_to_subfield(Fq2Element x) const;
  /// (a0, a1) with x = a0 + a1 γ.
  std::pair<FqElement, FqElement> coefficients(Fq2Element x) const noexcept;
  Fq2Element from_coefficients(FqElement a0, FqElement a1) const noexcept;

  /// Raw tables, exposed for determinism checks.
  const std::vector<std::uint32_t>& antilog_table() const noexcept { return antilog_; }
  const std::vector<std::uint32_t>& log_table() const noexcept { return log_; }

 private:
  FieldTower(BaseField base, CoeffList top_modulus);

  std::uint32_t reduce(std::int64_t e) const noexcept;

  BaseField base_;
  CoeffList top_modulus_;
  std::uint32_t order_;
  std::vector<std::uint32_t> antilog_;  // γ^b as a0 + q a1
  std::vector<std::uint32_t> log_;      // indexed by a0 + q a1; entry 0 unused
  std::vector<std::uint32_t> trace_;    // Tr(γ^b) codes
};

}  // namespace optcyc
