#include "optcyc/gf_tower.hpp"

#include "optcyc/errors.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace optcyc {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NonPrimitiveRoot: return "NonPrimitiveRoot";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::InvalidDivisorPair: return "InvalidDivisorPair";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::NotCyclic: return "NotCyclic";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::NonIntegerSolution: return "NonIntegerSolution";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::ZeroCode: return "ZeroCode";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string format_coeffs(const CoeffList& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs[i]);
  }
  return out;
}

CoeffList parse_coeffs(const std::string& text) {
  CoeffList out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw Error(Errc::InvalidArgument, "malformed coefficient list '" + text + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> factor_prime_power(std::uint64_t q) noexcept {
  if (q < 2 || q > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), m};
}

namespace {

using Digits = std::vector<std::uint32_t>;

std::uint64_t checked_power(std::uint32_t base, std::uint32_t exponent) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) {
    r *= base;
    if (r > std::numeric_limits<std::uint32_t>::max()) return r;
  }
  return r;
}

Digits to_digits(std::uint32_t code, std::uint32_t p, std::uint32_t m) {
  Digits d(m);
  for (auto& x : d) {
    x = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

// Remainder of a by monic b over F_p; both ascending.
Digits poly_mod_p(Digits a, const Digits& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    const std::uint32_t lead = a[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      a[i - db + j] = static_cast<std::uint32_t>((a[i - db + j] + (p - lead) * static_cast<std::uint64_t>(b[j])) % p);
    }
  }
  a.resize(std::min(a.size(), db));
  return a;
}

bool is_irreducible_over_prime(const CoeffList& f, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= m; ++d) {
    const std::uint64_t count = checked_power(p, d);
    for (std::uint64_t low = 0; low < count; ++low) {
      Digits g = to_digits(static_cast<std::uint32_t>(low), p, d);
      g.push_back(1);
      Digits r = poly_mod_p(Digits(f.begin(), f.end()), g, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

void check_monic(const CoeffList& f, std::uint32_t degree, std::uint32_t bound, const char* what) {
  if (f.size() != degree + 1 || f.back() != 1) {
    throw Error(Errc::InvalidArgument,
                std::string(what) + " modulus must be monic of degree " + std::to_string(degree));
  }
  for (auto c : f) {
    if (c >= bound) throw Error(Errc::InvalidArgument, std::string(what) + " modulus coefficient out of range");
  }
}

// Multiplicative order of y in F_q[y]/(y^2 + c1 y + c0), capped at q^2 - 1;
// returns 0 when y never returns to 1 within the cap.
std::uint32_t top_root_order(const BaseField& base, FqElement c0, FqElement c1) {
  const std::uint32_t cap = base.q() * base.q() - 1;
  FqElement a0{1}, a1{0};
  for (std::uint32_t step = 1; step <= cap; ++step) {
    // (a0 + a1 y) y = -a1 c0 + (a0 - a1 c1) y
    const FqElement n0 = base.neg(base.mul(a1, c0));
    const FqElement n1 = base.sub(a0, base.mul(a1, c1));
    a0 = n0;
    a1 = n1;
    if (a0.code == 1 && a1.code == 0) return step;
  }
  return 0;
}

bool top_has_root(const BaseField& base, FqElement c0, FqElement c1) {
  for (std::uint32_t x = 0; x < base.q(); ++x) {
    const FqElement e{x};
    const FqElement v = base.add(base.add(base.mul(e, e), base.mul(c1, e)), c0);
    if (v.is_zero()) return true;
  }
  return false;
}

}  // namespace

BaseField::BaseField(std::uint32_t p, std::uint32_t m, CoeffList modulus)
    : p_(p), m_(m), q_(0), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
  const std::uint64_t q = checked_power(p, m);
  if (q > 0xFFFFu) throw Error(Errc::FieldTooLarge, "q = " + std::to_string(q) + " exceeds 65535");
  q_ = static_cast<std::uint32_t>(q);
  check_monic(modulus_, m, p, "base");
  if (!is_irreducible_over_prime(modulus_, p)) {
    throw Error(Errc::ReducibleModulus, "base modulus " + format_coeffs(modulus_) + " is reducible over F_" +
                                            std::to_string(p));
  }

  add_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    const Digits da = to_digits(a, p, m);
    Digits dn(m);
    for (std::uint32_t i = 0; i < m; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = from_digits(dn, p);
    for (std::uint32_t b = 0; b < q_; ++b) {
      const Digits db = to_digits(b, p, m);
      Digits ds(m);
      for (std::uint32_t i = 0; i < m; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = from_digits(ds, p);
    }
  }

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  Digits cur(m, 0);
  cur[0] = 1;
  Digits modulus_digits(modulus_.begin(), modulus_.end());
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    const std::uint32_t code = from_digits(cur, p);
    if (code == 0 || (i > 0 && code == 1)) {
      throw Error(Errc::NonPrimitiveRoot, "root of base modulus " + format_coeffs(modulus_) + " is not primitive");
    }
    exp_[i] = code;
    log_[code] = i;
    // cur *= x (mod modulus)
    Digits shifted(m + 1, 0);
    for (std::uint32_t j = 0; j < m; ++j) shifted[j + 1] = cur[j];
    cur = poly_mod_p(std::move(shifted), modulus_digits, p);
  }
  if (from_digits(cur, p) != 1) {
    throw Error(Errc::NonPrimitiveRoot, "root of base modulus " + format_coeffs(modulus_) + " is not primitive");
  }
}

FqElement BaseField::mul(FqElement a, FqElement b) const noexcept {
  if (a.is_zero() || b.is_zero()) return {};
  return {exp_[(log_[a.code] + log_[b.code]) % (q_ - 1)]};
}

FqElement BaseField::inv(FqElement a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in F_q");
  return {exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
}

FqElement BaseField::pow(FqElement a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
    return e == 0 ? FqElement{1} : FqElement{};
  }
  const std::int64_t n = q_ - 1;
  const std::int64_t idx = ((static_cast<std::int64_t>(log_[a.code]) * (e % n)) % n + n) % n;
  return {exp_[static_cast<std::size_t>(idx)]};
}

FqElement BaseField::from_int(std::int64_t n) const noexcept {
  const std::int64_t r = ((n % p_) + p_) % p_;
  return {static_cast<std::uint32_t>(r)};
}

CoeffList find_base_modulus(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
  if (m == 1) {
    for (std::uint32_t g = 1; g < p; ++g) {
      std::uint32_t x = g, order = 1;
      while (x != 1) {
        x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * g % p);
        ++order;
      }
      if (order == p - 1) return {(p - g) % p, 1};
    }
  }
  const std::uint64_t count = checked_power(p, m);
  if (count > 0xFFFFu) throw Error(Errc::FieldTooLarge, "p^m exceeds 65535");
  for (std::uint64_t low = 0; low < count; ++low) {
    CoeffList f = to_digits(static_cast<std::uint32_t>(low), p, m);
    f.push_back(1);
    if (f[0] == 0 || !is_irreducible_over_prime(f, p)) continue;
    try {
      BaseField probe(p, m, f);
      return f;
    } catch (const Error& e) {
      if (e.code() != Errc::NonPrimitiveRoot) throw;
    }
  }
  throw Error(Errc::InvalidArgument, "no primitive modulus found");  // unreachable for valid input
}

CoeffList find_top_modulus(const BaseField& base) {
  const std::uint32_t q = base.q();
  for (std::uint32_t c1 = 0; c1 < q; ++c1) {
    for (std::uint32_t c0 = 1; c0 < q; ++c0) {
      if (top_has_root(base, {c0}, {c1})) continue;
      if (top_root_order(base, {c0}, {c1}) == q * q - 1) return {c0, c1, 1};
    }
  }
  throw Error(Errc::InvalidArgument, "no primitive quadratic found");  // unreachable
}

FieldTower FieldTower::build(std::uint32_t p, std::uint32_t m, const TowerOptions& options) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
  const std::uint64_t q = checked_power(p, m);
  if (q > options.max_q || q > 0xFFFFu) {
    throw Error(Errc::FieldTooLarge,
                "q = " + std::to_string(q) + " exceeds the configured cap " + std::to_string(options.max_q));
  }
  BaseField base(p, m, options.base_modulus ? *options.base_modulus : find_base_modulus(p, m));
  CoeffList top = options.top_modulus ? *options.top_modulus : find_top_modulus(base);
  return FieldTower(std::move(base), std::move(top));
}

FieldTower::FieldTower(BaseField base, CoeffList top_modulus)
    : base_(std::move(base)), top_modulus_(std::move(top_modulus)), order_(base_.q() * base_.q() - 1) {
  const std::uint32_t q = base_.q();
  check_monic(top_modulus_, 2, q, "top");
  const FqElement c0{top_modulus_[0]}, c1{top_modulus_[1]};
  if (top_has_root(base_, c0, c1)) {
    throw Error(Errc::ReducibleModulus, "top modulus " + format_coeffs(top_modulus_) + " has a root in F_q");
  }
  if (top_root_order(base_, c0, c1) != order_) {
    throw Error(Errc::NonPrimitiveRoot, "root of top modulus " + format_coeffs(top_modulus_) + " is not primitive");
  }

  antilog_.resize(order_);
  log_.assign(static_cast<std::size_t>(q) * q, 0);
  FqElement a0{1}, a1{0};
  for (std::uint32_t b = 0; b < order_; ++b) {
    const std::uint32_t code = a0.code + q * a1.code;
    antilog_[b] = code;
    log_[code] = b;
    const FqElement n0 = base_.neg(base_.mul(a1, c0));
    const FqElement n1 = base_.sub(a0, base_.mul(a1, c1));
    a0 = n0;
    a1 = n1;
  }

  trace_.resize(order_);
  for (std::uint32_t b = 0; b < order_; ++b) {
    const std::uint32_t x = antilog_[b];
    const std::uint32_t y = antilog_[static_cast<std::uint64_t>(b) * q % order_];
    const FqElement t0 = base_.add({x % q}, {y % q});
    const FqElement t1 = base_.add({x / q}, {y / q});
    if (!t1.is_zero()) throw Error(Errc::InvalidArgument, "trace left the subfield");  // table corruption
    trace_[b] = t0.code;
  }
}

std::uint32_t FieldTower::reduce(std::int64_t e) const noexcept {
  const std::int64_t n = order_;
  return static_cast<std::uint32_t>(((e % n) + n) % n);
}

Fq2Element FieldTower::gamma_pow(std::int64_t exponent) const noexcept {
  return Fq2Element::from_log(reduce(exponent));
}

std::pair<FqElement, FqElement> FieldTower::coefficients(Fq2Element x) const noexcept {
  if (x.is_zero()) return {FqElement{}, FqElement{}};
  const std::uint32_t code = antilog_[x.log()];
  return {FqElement{code % q()}, FqElement{code / q()}};
}

Fq2Element FieldTower::from_coefficients(FqElement a0, FqElement a1) const noexcept {
  const std::uint32_t code = a0.code + q() * a1.code;
  if (code == 0) return {};
  return Fq2Element::from_log(log_[code]);
}

Fq2Element FieldTower::add(Fq2Element a, Fq2Element b) const noexcept {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto [a0, a1] = coefficients(a);
  auto [b0, b1] = coefficients(b);
  return from_coefficients(base_.add(a0, b0), base_.add(a1, b1));
}

Fq2Element FieldTower::neg(Fq2Element a) const noexcept {
  if (a.is_zero() || p() == 2) return a;
  return Fq2Element::from_log(static_cast<std::uint32_t>((a.log() + order_ / 2) % order_));
}

Fq2Element FieldTower::mul(Fq2Element a, Fq2Element b) const noexcept {
  if (a.is_zero() || b.is_zero()) return {};
  return Fq2Element::from_log(static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.log()) + b.log()) % order_));
}

Fq2Element FieldTower::div(Fq2Element a, Fq2Element b) const {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero in F_{q^2}");
  if (a.is_zero()) return {};
  return Fq2Element::from_log(static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.log()) + order_ - b.log()) % order_));
}

Fq2Element FieldTower::pow(Fq2Element a, std::int64_t exponent) const {
  if (a.is_zero()) {
    if (exponent < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
    return exponent == 0 ? one() : Fq2Element{};
  }
  const std::int64_t n = order_;
  const std::int64_t e = ((exponent % n) + n) % n;
  return Fq2Element::from_log(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.log()) * e % order_));
}

Fq2Element FieldTower::frobenius(Fq2Element x) const noexcept {
  if (x.is_zero()) return x;
  return Fq2Element::from_log(static_cast<std::uint32_t>(static_cast<std::uint64_t>(x.log()) * q() % order_));
}

FqElement FieldTower::trace(Fq2Element x) const noexcept {
  if (x.is_zero()) return {};
  return {trace_[x.log()]};
}

FqElement FieldTower::norm(Fq2Element x) const noexcept {
  if (x.is_zero()) return {};
  const auto idx = static_cast<std::uint64_t>(x.log()) * (q() + 1) % order_;
  return {antilog_[idx]};
}

SubfieldMembership FieldTower::subfield_membership(Fq2Element x) const noexcept {
  if (x.is_zero()) return {true, std::nullopt};
  if (x.log() % (q() + 1) != 0) return {false, std::nullopt};
  return {true, x.log() / (q() + 1)};
}

Fq2Element FieldTower::embed(FqElement a) const noexcept {
  if (a.is_zero()) return {};
  return Fq2Element::from_log(log_[a.code]);
}

FqElement FieldTower::restrict_to_subfield(Fq2Element x) const {
  auto [a0, a1] = coefficients(x);
  if (!a1.is_zero()) throw Error(Errc::InvalidArgument, "element is not in the subfield");
  return a0;
}

}  // namespace optcyc
