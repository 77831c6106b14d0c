#include "optcyc/analysis.hpp"

#include "optcyc/errors.hpp"

#include <numeric>

namespace optcyc {

namespace {

BigInt sign(std::int64_t j) { return (j % 2 == 0) ? BigInt(1) : BigInt(-1); }

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0) throw Error(Errc::InexactDivision, std::string(what) + ": division by zero");
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) {
    throw Error(Errc::InexactDivision, std::string(what) + ": " + num.str() + " / " + den.str() + " is not integral");
  }
  return quot;
}

BigInt to_integer(const BigRational& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw Error(Errc::NonIntegerSolution, std::string(what) + " = " + r.str() + " is not an integer");
  }
  return boost::multiprecision::numerator(r);
}

BigInt pw(std::uint64_t q, unsigned e) { return pow_big(BigInt(q), e); }

}  // namespace

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

BigInt griesmer_bound(std::uint64_t q, std::uint64_t k, std::uint64_t d) {
  if (q < 2 || k < 1 || d < 1) throw Error(Errc::InvalidArgument, "griesmer_bound needs q >= 2, k >= 1, d >= 1");
  BigInt sum = 0, power = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    sum += (BigInt(d) + power - 1) / power;
    power *= q;
  }
  return sum;
}

bool is_length_optimal(const CodeHandle& code, std::uint64_t d) {
  return griesmer_bound(code.tower().q(), code.k(), d) == code.n();
}

BigInt krawtchouk(std::int64_t n, std::int64_t q, std::int64_t j, std::int64_t x) {
  BigInt sum = 0;
  for (std::int64_t l = 0; l <= j; ++l) {
    const BigInt term = binomial(x, l) * binomial(n - x, j - l);
    if (term == 0) continue;
    sum += sign(l) * pow_big(BigInt(q - 1), static_cast<unsigned>(j - l)) * term;
  }
  return sum;
}

std::optional<BigInt> krawtchouk_closed_form(std::int64_t q, std::int64_t j, std::int64_t x) {
  if (j < 2) return std::nullopt;
  const BigInt lead = BigInt(q) * binomial(q - 1, j - 2);
  const BigInt den = BigInt(j) * (j - 1);
  BigInt num;
  if (x == 0) {
    num = lead * (BigInt(q) * q - 1) * pow_big(BigInt(q - 1), static_cast<unsigned>(j - 1));
  } else if (x == q - 1) {
    num = sign(j) * lead * (BigInt(q) * (j * j - 3 * j + 1) + 1);
  } else if (x == q) {
    num = sign(j) * lead * (1 - BigInt(q) * (j - 1));
  } else if (x == q + 1) {
    num = sign(j) * lead * (q + 1);
  } else {
    return std::nullopt;
  }
  return exact_div(num, den, "Krawtchouk closed form");
}

BigInt power_moment(const WeightDistribution& dist, unsigned r) {
  BigInt sum = 0;
  for (std::size_t i = 1; i < dist.counts.size(); ++i) sum += pw(i, r) * dist.counts[i];
  return sum;
}

BigInt pless_rhs_scaled(const DualLowWeights& dual, std::uint64_t q, unsigned k, std::uint64_t n, unsigned r) {
  const BigInt Q(q), m = BigInt(n) * (q - 1), qk = pw(q, k);
  switch (r) {
    case 0:
      return qk - 1;
    case 1:
      return qk * m;
    case 2:
      return qk * (m * (m + 1) + 2 * dual.a2);
    case 3:
      return qk * (m * (m * (m + 3) - Q + 2) + 6 * (m - Q + 2) * dual.a2 - 6 * dual.a3);
    case 4:
      return qk * (m * (m * (m * (m + 6) - 4 * Q + 11) + Q * Q - 6 * (Q - 1)) +
                   (12 * m * (m - 2 * Q + 5) + 14 * Q * Q - 72 * (Q - 1)) * dual.a2 -
                   (24 * m - 36 * (Q - 2)) * dual.a3 + 24 * dual.a4);
    default:
      throw Error(Errc::InvalidArgument, "only the first five power moments are available");
  }
}

bool pless_identity_holds(const WeightDistribution& primal, const DualLowWeights& dual, std::uint64_t q, unsigned k,
                          unsigned r) {
  return pw(q, r) * power_moment(primal, r) == pless_rhs_scaled(dual, q, k, primal.n, r);
}

std::pair<BigInt, BigInt> pless_solve_primal(std::uint64_t q) {
  // x A_{q-1} + y A_{q+1} with A_q = q^2 - 1 fixed:
  //   A_{q-1} + A_{q+1}             = q^3 - 1 - (q^2 - 1)
  //   (q-1) A_{q-1} + (q+1) A_{q+1} = q^2 m - q (q^2 - 1),  m = (q+1)(q-1)
  const BigRational Q(q);
  const BigRational a11 = 1, a12 = 1, a21 = Q - 1, a22 = Q + 1;
  const BigRational aq = Q * Q - 1;
  const BigRational b1 = Q * Q * Q - 1 - aq;
  const BigRational b2 = Q * Q * ((Q + 1) * (Q - 1)) - Q * aq;
  const BigRational det = a11 * a22 - a12 * a21;
  if (det == 0) throw Error(Errc::SingularSystem, "primal Pless system is singular");
  const BigRational x = (b1 * a22 - a12 * b2) / det;
  const BigRational y = (a11 * b2 - b1 * a21) / det;
  return {to_integer(x, "A_{q-1}"), to_integer(y, "A_{q+1}")};
}

unsigned dimension_from_distribution(const WeightDistribution& dist, std::uint64_t q) {
  const BigInt total = dist.total();
  BigInt p = 1;
  for (unsigned k = 0; p <= total; ++k, p *= q) {
    if (p == total) return k;
  }
  throw Error(Errc::InvalidArgument, "distribution total " + total.str() + " is not a power of q");
}

DualLowWeights pless_solve_dual(std::uint64_t q, const WeightDistribution& primal) {
  if (q == 2) throw Error(Errc::InvalidArgument, "q = 2: the dual is the null code");
  const unsigned k = dimension_from_distribution(primal, q);
  const BigRational Q(q), m = BigRational(BigInt(primal.n) * (q - 1));
  const BigRational qk(pw(q, k));
  auto scaled = [&](unsigned r) { return BigRational(pw(q, r) * power_moment(primal, r)) / qk; };

  const BigRational a2 = (scaled(2) - m * (m + 1)) / 2;
  const BigRational a3 = (m * (m * (m + 3) - Q + 2) + 6 * (m - Q + 2) * a2 - scaled(3)) / 6;
  const BigRational a4 = (scaled(4) - m * (m * (m * (m + 6) - 4 * Q + 11) + Q * Q - 6 * (Q - 1)) -
                          (12 * m * (m - 2 * Q + 5) + 14 * Q * Q - 72 * (Q - 1)) * a2 + (24 * m - 36 * (Q - 2)) * a3) /
                         24;
  return {to_integer(a2, "A_2^dual"), to_integer(a3, "A_3^dual"), to_integer(a4, "A_4^dual")};
}

WeightDistribution dual_distribution_transform(const WeightDistribution& dist, std::uint64_t q, unsigned k) {
  const auto n = static_cast<std::int64_t>(dist.n);
  const BigInt size = pw(q, k);
  WeightDistribution out(dist.n);
  for (std::int64_t j = 0; j <= n; ++j) {
    BigInt sum = 0;
    for (std::int64_t i = 0; i <= n; ++i) {
      if (dist.counts[static_cast<std::size_t>(i)] == 0) continue;
      sum += dist.counts[static_cast<std::size_t>(i)] * krawtchouk(n, static_cast<std::int64_t>(q), j, i);
    }
    BigInt a = exact_div(sum, size, "dual transform");
    if (a < 0) throw Error(Errc::InexactDivision, "dual transform produced a negative count at weight " + std::to_string(j));
    out.counts[static_cast<std::size_t>(j)] = std::move(a);
  }
  return out;
}

WeightDistribution dual_distribution_closed_form(std::uint64_t q) {
  if (q < 3) throw Error(Errc::InvalidArgument, "closed-form dual distribution needs q >= 3");
  const auto Q = static_cast<std::int64_t>(q);
  WeightDistribution out(q + 1);
  out.counts[0] = 1;
  for (std::int64_t j = 4; j <= Q + 1; ++j) {
    const BigInt bracket = 2 * pow_big(BigInt(Q - 1), static_cast<unsigned>(j - 1)) +
                           sign(j) * ((j - 1) * BigInt(Q) * ((j - 2) * BigInt(Q) - 2) + 2);
    const BigInt num = (BigInt(Q) * Q - 1) * binomial(Q - 1, j - 2) * bracket;
    const BigInt den = 2 * BigInt(j) * (j - 1) * Q * Q;
    out.counts[static_cast<std::size_t>(j)] = exact_div(num, den, "closed-form dual distribution");
  }
  return out;
}

BigInt a4_dual(std::uint64_t q) {
  const BigInt Q(q);
  return exact_div(Q * (Q * Q - 1) * (Q - 1) * (Q - 2), 24, "A_4^dual");
}

BigInt a5_dual(std::uint64_t q) {
  const BigInt Q(q);
  return exact_div((Q * Q - 1) * Q * (Q - 1) * (Q - 2) * (Q - 3) * (Q - 4), 120, "A_5^dual");
}

std::string_view to_string(IrreducibleClassTag tag) noexcept {
  switch (tag) {
    case IrreducibleClassTag::OneWeightDim1: return "one-weight, dimension 1";
    case IrreducibleClassTag::OneWeightDim2: return "one-weight, dimension 2";
    case IrreducibleClassTag::SemiprimitiveTwoWeight: return "semiprimitive two-weight, dimension 2";
  }
  return "unknown";
}

IrreducibleClass classify_irreducible(const FieldTower& tower, std::uint32_t n) {
  const std::uint64_t q = tower.q(), big = tower.order();
  if (n == 0 || big % n != 0) throw Error(Errc::NotADivisor, std::to_string(n) + " does not divide q^2-1");
  IrreducibleClass c;
  c.u = static_cast<std::uint32_t>(std::gcd(q + 1, big / n));
  c.predicted = WeightDistribution(n);
  c.predicted.counts[0] = 1;
  if (c.u == q + 1) {
    c.tag = IrreducibleClassTag::OneWeightDim1;
    c.dimension = 1;
    c.predicted.counts[n] = q - 1;
    return c;
  }
  c.dimension = 2;
  c.tag = c.u == 1 ? IrreducibleClassTag::OneWeightDim2 : IrreducibleClassTag::SemiprimitiveTwoWeight;
  const BigInt low_weight = exact_div(BigInt(n) * (q + 1 - c.u), q + 1, "irreducible weight");
  const auto w = static_cast<std::size_t>(low_weight);
  c.predicted.counts[w] += exact_div(BigInt(big), c.u, "irreducible count");
  c.predicted.counts[n] += exact_div(BigInt(big) * (c.u - 1), c.u, "irreducible count");
  return c;
}

WeightDistribution expected_enumerator_primal(std::uint64_t q) {
  if (q < 2) throw Error(Errc::InvalidArgument, "q must be at least 2");
  const BigInt Q(q);
  WeightDistribution d(q + 1);
  d.counts[0] = 1;
  d.counts[q - 1] += exact_div(Q * (Q * Q - 1), 2, "A_{q-1}");
  d.counts[q] += Q * Q - 1;
  d.counts[q + 1] += exact_div(Q * (Q - 1) * (Q - 1), 2, "A_{q+1}");
  return d;
}

std::size_t min_distance(const WeightDistribution& dist) {
  for (std::size_t i = 1; i < dist.counts.size(); ++i) {
    if (dist.counts[i] > 0) return i;
  }
  throw Error(Errc::ZeroCode, "the zero code has no minimum distance");
}

}  // namespace optcyc
