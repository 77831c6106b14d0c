#include "optcyc/code_builder.hpp"

#include "optcyc/errors.hpp"

#include <algorithm>
#include <numeric>

namespace optcyc {

namespace {

// q^k saturated at limit + 1.
std::uint64_t saturating_power(std::uint64_t q, std::uint64_t k, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (r > limit / q) return limit + 1;
    r *= q;
  }
  return r;
}

void check_cap(std::uint64_t words, std::uint64_t cap) {
  if (words > cap) {
    throw Error(Errc::EnumerationTooLarge,
                "enumeration needs more than " + std::to_string(cap) + " words; raise the cap to proceed");
  }
}

// Depth-first walk over all F_q-combinations of the generator rows, keeping
// one partial sum per depth.
template <typename Leaf>
void walk_row_space(const BaseField& f, const FqMatrix& g, std::uint64_t max_words, Leaf&& leaf) {
  const std::size_t k = g.rows(), n = g.cols();
  const std::uint32_t q = f.q();
  check_cap(saturating_power(q, k, max_words), max_words);

  std::vector<std::vector<Codeword>> scaled(k, std::vector<Codeword>(q));
  for (std::size_t r = 0; r < k; ++r) {
    const Codeword row = g.row(r);
    for (std::uint32_t s = 0; s < q; ++s) scaled[r][s] = scalar_mul(f, {s}, row);
  }
  std::vector<Codeword> partial(k + 1, Codeword(n));
  std::vector<std::uint32_t> digit(k, 0);

  auto rebuild = [&](std::size_t level) {
    for (std::size_t i = 0; i < n; ++i) partial[level + 1][i] = f.add(partial[level][i], scaled[level][digit[level]][i]);
  };
  for (std::size_t level = 0; level < k; ++level) rebuild(level);

  while (true) {
    leaf(partial[k]);
    // odometer increment, least significant digit last
    std::size_t level = k;
    while (level > 0) {
      --level;
      if (++digit[level] < q) break;
      digit[level] = 0;
      if (level == 0) return;
    }
    if (k == 0) return;
    for (std::size_t l = level; l < k; ++l) rebuild(l);
  }
}

std::uint32_t gcd_u32(std::uint32_t a, std::uint32_t b) { return std::gcd(a, b); }

}  // namespace

std::string CodeHandle::describe() const {
  const std::string qq = std::to_string(tower_->q() * tower_->q());
  return std::visit(
      [&](const auto& kind) -> std::string {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, IrreducibleKind>) {
          return "C(" + std::to_string(kind.n) + "," + qq + ")";
        } else if constexpr (std::is_same_v<K, ReducibleKind>) {
          return "C(" + std::to_string(kind.n1) + "," + std::to_string(kind.n2) + "," + qq + ")";
        } else {
          return "dual of " + kind.primal->describe();
        }
      },
      kind_);
}

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

std::vector<std::size_t> WeightDistribution::nonzero_weights() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] != 0) out.push_back(i);
  }
  return out;
}

std::string format_enumerator(const WeightDistribution& dist) {
  std::string out;
  for (std::size_t i = 0; i < dist.counts.size(); ++i) {
    const BigInt& c = dist.counts[i];
    if (c == 0) continue;
    if (!out.empty()) out += (c < 0 ? "" : "+");
    if (i == 0) {
      out += c.str();
    } else {
      if (c != 1) out += c.str();
      out += "z";
      if (i != 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::uint32_t multiplicative_order(std::uint64_t n, std::uint64_t q) {
  if (n == 0 || std::gcd(n, q) != 1) throw Error(Errc::InvalidArgument, "ord_n(q) needs gcd(n, q) = 1");
  if (n == 1) return 1;
  std::uint64_t x = q % n;
  std::uint32_t order = 1;
  while (x != 1) {
    x = x * q % n;
    ++order;
  }
  return order;
}

Codeword irr_codeword(const FieldTower& tower, std::uint32_t n, Fq2Element beta) {
  if (n == 0 || tower.order() % n != 0) {
    throw Error(Errc::NotADivisor, std::to_string(n) + " does not divide q^2-1 = " + std::to_string(tower.order()));
  }
  const std::int64_t step = tower.order() / n;
  Codeword out(n);
  for (std::uint32_t i = 0; i < n; ++i) out[i] = tower.trace(tower.mul(beta, tower.gamma_pow(step * i)));
  return out;
}

std::uint32_t reducible_length(const FieldTower& tower, std::uint32_t n1, std::uint32_t n2) {
  const std::uint32_t q = tower.q(), big = tower.order();
  if (n1 == 0 || n2 == 0 || (q - 1) % n1 != 0 || big % n2 != 0 || (q - 1) % n2 == 0) {
    throw Error(Errc::InvalidDivisorPair, "need n1 | q-1, n2 | q^2-1 and n2 not dividing q-1 (n1=" +
                                              std::to_string(n1) + ", n2=" + std::to_string(n2) + ")");
  }
  return big / gcd_u32(big / n1, big / n2);
}

Codeword red_codeword(const FieldTower& tower, std::uint32_t n1, std::uint32_t n2, FqElement alpha,
                      Fq2Element beta) {
  const std::uint32_t n = reducible_length(tower, n1, n2);
  const BaseField& f = tower.base();
  const FqElement sub_gen = tower.restrict_to_subfield(tower.gamma_pow(tower.q() + 1));
  const std::int64_t step1 = (tower.q() - 1) / n1;
  const std::int64_t step2 = tower.order() / n2;
  Codeword out(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const FqElement first = f.mul(alpha, f.pow(sub_gen, step1 * i));
    out[i] = f.add(first, tower.trace(tower.mul(beta, tower.gamma_pow(step2 * i))));
  }
  return out;
}

CodePtr build_code(TowerPtr tower, const CodeKind& kind) {
  const FieldTower& t = *tower;
  const BaseField& f = t.base();
  const Fq2Element one = t.one(), gamma = t.gamma_pow(1);

  if (const auto* irr = std::get_if<IrreducibleKind>(&kind)) {
    const std::uint32_t expected = multiplicative_order(irr->n, t.q());
    std::vector<Codeword> rows;
    for (Fq2Element beta : {one, gamma}) {
      Codeword c = irr_codeword(t, irr->n, beta);
      auto trial = rows;
      trial.push_back(c);
      if (rank(f, FqMatrix::from_rows(trial, irr->n)) == trial.size()) rows = std::move(trial);
    }
    if (rows.size() != expected) {
      throw Error(Errc::RankDeficient, "irreducible code rank " + std::to_string(rows.size()) +
                                           " differs from ord_n(q) = " + std::to_string(expected));
    }
    return std::make_shared<const CodeHandle>(std::move(tower), kind, FqMatrix::from_rows(rows, irr->n));
  }

  if (const auto* red = std::get_if<ReducibleKind>(&kind)) {
    const std::uint32_t n = reducible_length(t, red->n1, red->n2);
    std::vector<Codeword> rows{red_codeword(t, red->n1, red->n2, FqElement{1}, Fq2Element{}),
                               red_codeword(t, red->n1, red->n2, FqElement{}, one),
                               red_codeword(t, red->n1, red->n2, FqElement{}, gamma)};
    FqMatrix g = FqMatrix::from_rows(rows, n);
    if (rank(f, g) != 3) throw Error(Errc::RankDeficient, "reducible generator does not have rank 3");
    return std::make_shared<const CodeHandle>(std::move(tower), kind, std::move(g));
  }

  return dual_code(std::get<DualKind>(kind).primal);
}

CodePtr build_central_code(TowerPtr tower) {
  const std::uint32_t q = tower->q();
  return build_code(std::move(tower), ReducibleKind{1, q + 1});
}

CodePtr dual_code(const CodePtr& code) {
  FqMatrix h = null_space(code->tower().base(), code->generator());
  return std::make_shared<const CodeHandle>(code->tower_ptr(), DualKind{code}, std::move(h));
}

bool is_cyclic(const CodeHandle& code) {
  const BaseField& f = code.tower().base();
  for (std::size_t r = 0; r < code.k(); ++r) {
    if (!in_row_space(f, code.generator(), cyclic_shift(code.generator().row(r), 1))) return false;
  }
  return true;
}

void for_each_parameterized(const CodeHandle& code, const ParameterVisitor& visit, std::uint64_t max_words) {
  const FieldTower& t = code.tower();
  const std::uint64_t q = t.q();
  if (const auto* red = std::get_if<ReducibleKind>(&code.kind())) {
    check_cap(q * q * q, max_words);
    for (std::uint32_t a = 0; a < q; ++a) {
      const FqElement alpha{a};
      visit(alpha, Fq2Element{}, red_codeword(t, red->n1, red->n2, alpha, Fq2Element{}));
      for (std::uint32_t b = 0; b < t.order(); ++b) {
        const auto beta = Fq2Element::from_log(b);
        visit(alpha, beta, red_codeword(t, red->n1, red->n2, alpha, beta));
      }
    }
    return;
  }
  if (const auto* irr = std::get_if<IrreducibleKind>(&code.kind())) {
    check_cap(q * q, max_words);
    visit(FqElement{}, Fq2Element{}, irr_codeword(t, irr->n, Fq2Element{}));
    for (std::uint32_t b = 0; b < t.order(); ++b) {
      const auto beta = Fq2Element::from_log(b);
      visit(FqElement{}, beta, irr_codeword(t, irr->n, beta));
    }
    return;
  }
  throw Error(Errc::InvalidArgument, "dual codes have no trace parameterization");
}

void for_each_codeword(const BaseField& field, const FqMatrix& generator, std::uint64_t max_words,
                       const std::function<void(const Codeword&)>& visit) {
  walk_row_space(field, generator, max_words, visit);
}

WeightDistribution enumerate_row_space(const BaseField& field, const FqMatrix& generator, std::uint64_t max_words) {
  std::vector<std::uint64_t> hist(generator.cols() + 1, 0);
  walk_row_space(field, generator, max_words, [&](const Codeword& w) { ++hist[hamming_weight(w)]; });
  WeightDistribution dist(generator.cols());
  for (std::size_t i = 0; i < hist.size(); ++i) dist.counts[i] = hist[i];
  return dist;
}

WeightDistribution enumerate_code(const CodeHandle& code, std::optional<std::uint64_t> max_words) {
  const bool is_dual = std::holds_alternative<DualKind>(code.kind());
  const std::uint64_t cap = max_words.value_or(is_dual ? kDefaultDualEnumerationCap : kDefaultPrimalEnumerationCap);
  if (std::holds_alternative<ReducibleKind>(code.kind())) {
    std::vector<std::uint64_t> hist(code.n() + 1, 0);
    for_each_parameterized(
        code, [&](FqElement, Fq2Element, const Codeword& w) { ++hist[hamming_weight(w)]; }, cap);
    WeightDistribution dist(code.n());
    for (std::size_t i = 0; i < hist.size(); ++i) dist.counts[i] = hist[i];
    return dist;
  }
  return enumerate_row_space(code.tower().base(), code.generator(), cap);
}

std::set<FqElement> ssymb(const Codeword& v) { return {v.begin(), v.end()}; }

std::size_t occr(FqElement s, const Codeword& v) noexcept {
  return static_cast<std::size_t>(std::count(v.begin(), v.end(), s));
}

FqPoly generator_polynomial(const CodeHandle& code) {
  const BaseField& f = code.tower().base();
  FqPoly g = FqPoly::x_n_minus_1(f, code.n());
  for (std::size_t r = 0; r < code.k(); ++r) g = poly_gcd(f, g, codeword_polynomial(code.generator().row(r)));
  if (static_cast<std::size_t>(g.degree()) != code.n() - code.k()) {
    throw Error(Errc::NotCyclic, code.describe() + ": gcd degree " + std::to_string(g.degree()) +
                                     " inconsistent with n-k = " + std::to_string(code.n() - code.k()));
  }
  return g;
}

FqPoly parity_check_polynomial(const CodeHandle& code) {
  const BaseField& f = code.tower().base();
  return poly_divrem(f, FqPoly::x_n_minus_1(f, code.n()), generator_polynomial(code)).first;
}

std::string_view to_string(DecodeVerdict v) noexcept {
  switch (v) {
    case DecodeVerdict::Clean: return "Clean";
    case DecodeVerdict::Corrected: return "Corrected";
    case DecodeVerdict::Detected: return "Detected";
  }
  return "Unknown";
}

DecodeResult syndrome_decode(const CodeHandle& dual, const Codeword& received) {
  const auto* kind = std::get_if<DualKind>(&dual.kind());
  if (kind == nullptr) throw Error(Errc::InvalidArgument, "syndrome_decode expects a dual code handle");
  if (received.size() != dual.n()) {
    throw Error(Errc::LengthMismatch,
                "received word has length " + std::to_string(received.size()) + ", expected " + std::to_string(dual.n()));
  }
  const BaseField& f = dual.tower().base();
  const FqMatrix& h = kind->primal->generator();

  Codeword syndrome(h.rows());
  bool clean = true;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    syndrome[r] = dot(f, h.row(r), received);
    clean = clean && syndrome[r].is_zero();
  }
  if (clean) return {DecodeVerdict::Clean, 0, {}, received};

  std::optional<std::pair<std::size_t, FqElement>> match;
  for (std::size_t col = 0; col < h.cols(); ++col) {
    std::size_t lead = 0;
    while (lead < h.rows() && h.at(lead, col).is_zero()) ++lead;
    if (lead == h.rows()) continue;
    const FqElement e = f.div(syndrome[lead], h.at(lead, col));
    if (e.is_zero()) continue;
    bool ok = true;
    for (std::size_t r = 0; r < h.rows() && ok; ++r) ok = f.mul(e, h.at(r, col)) == syndrome[r];
    if (!ok) continue;
    if (match) return {DecodeVerdict::Detected, 0, {}, received};  // ambiguous
    match = {col, e};
  }
  if (!match) return {DecodeVerdict::Detected, 0, {}, received};

  Codeword fixed = received;
  fixed[match->first] = f.sub(fixed[match->first], match->second);
  return {DecodeVerdict::Corrected, match->first, match->second, std::move(fixed)};
}

}  // namespace optcyc
