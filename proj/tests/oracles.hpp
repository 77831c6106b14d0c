#pragma once

// Slow reference implementations used to cross-check the library. Nothing
// here touches optcyc's tables: F_q is schoolbook polynomial arithmetic mod
// the base modulus, F_{q^2} is pairs over it, Krawtchouk values come from
// expanding (1+(q-1)z)^{n-x} (1-z)^x.

#include "optcyc/bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using optcyc::BigInt;
using Code = std::uint32_t;

struct SlowFq {
  std::uint32_t p, m, q;
  std::vector<std::uint32_t> modulus;  // monic, ascending, degree m

  SlowFq(std::uint32_t p_, std::vector<std::uint32_t> mod) : p(p_), m(static_cast<std::uint32_t>(mod.size() - 1)), q(1), modulus(std::move(mod)) {
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
  }

  std::vector<std::uint32_t> digits(Code a) const {
    std::vector<std::uint32_t> d(m);
    for (std::uint32_t i = 0; i < m; ++i, a /= p) d[i] = a % p;
    return d;
  }
  Code pack(const std::vector<std::uint32_t>& d) const {
    Code a = 0;
    for (std::uint32_t i = m; i-- > 0;) a = a * p + d[i];
    return a;
  }
  Code add(Code a, Code b) const {
    auto x = digits(a), y = digits(b);
    for (std::uint32_t i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  Code neg(Code a) const {
    auto x = digits(a);
    for (auto& v : x) v = (p - v) % p;
    return pack(x);
  }
  Code mul(Code a, Code b) const {
    const auto x = digits(a), y = digits(b);
    std::vector<std::uint64_t> prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    for (std::size_t d = prod.size(); d-- > m;) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      for (std::uint32_t i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - c) * modulus[i]) % p;
    }
    std::vector<std::uint32_t> r(m);
    for (std::uint32_t i = 0; i < m; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return pack(r);
  }
  Code pow(Code a, std::uint64_t e) const {
    Code r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  /// Multiplicative order by walking powers.
  std::uint64_t order(Code a) const {
    Code x = a;
    for (std::uint64_t k = 1; k <= q; ++k, x = mul(x, a))
      if (x == 1) return k;
    return 0;
  }
};

struct SlowFq2 {
  SlowFq f;
  Code c0, c1;  // y^2 + c1 y + c0
  using E = std::pair<Code, Code>;

  E one() const { return {1, 0}; }
  E gamma() const { return {0, 1}; }
  E add(E a, E b) const { return {f.add(a.first, b.first), f.add(a.second, b.second)}; }
  E mul(E a, E b) const {
    const Code a0b0 = f.mul(a.first, b.first);
    const Code mid = f.add(f.mul(a.first, b.second), f.mul(a.second, b.first));
    const Code hi = f.mul(a.second, b.second);
    return {f.add(a0b0, f.neg(f.mul(hi, c0))), f.add(mid, f.neg(f.mul(hi, c1)))};
  }
  E pow(E a, std::uint64_t e) const {
    E r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// x + x^q; the second coordinate must vanish.
  E trace(E x) const { return add(x, pow(x, f.q)); }
  std::uint64_t order(E a) const {
    E x = a;
    const std::uint64_t n = std::uint64_t{f.q} * f.q;
    for (std::uint64_t k = 1; k <= n; ++k, x = mul(x, a))
      if (x == one()) return k;
    return 0;
  }
};

/// (Tr(γ^b γ^{((q^2-1)/n) i}))_i via the slow tower.
inline std::vector<Code> trace_word(const SlowFq2& t, std::uint64_t n, std::uint64_t b) {
  const std::uint64_t N = std::uint64_t{t.f.q} * t.f.q - 1;
  std::vector<Code> w;
  for (std::uint64_t i = 0; i < n; ++i) w.push_back(t.trace(t.pow(t.gamma(), (b + (N / n) * i) % N)).first);
  return w;
}

/// Coefficient of z^j in (1+(q-1)z)^{n-x} (1-z)^x.
inline BigInt krawtchouk(std::int64_t n, std::int64_t q, std::int64_t j, std::int64_t x) {
  std::vector<BigInt> poly{1};
  const auto times = [&](BigInt c0, BigInt c1) {
    std::vector<BigInt> r(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      r[i] += poly[i] * c0;
      r[i + 1] += poly[i] * c1;
    }
    poly = std::move(r);
  };
  for (std::int64_t i = 0; i < n - x; ++i) times(1, q - 1);
  for (std::int64_t i = 0; i < x; ++i) times(1, -1);
  return j < static_cast<std::int64_t>(poly.size()) ? poly[static_cast<std::size_t>(j)] : BigInt(0);
}

/// A_j^⊥ by scanning all of F_q^n for vectors orthogonal to every row.
inline std::vector<BigInt> dual_by_full_scan(const SlowFq& f, const std::vector<std::vector<Code>>& rows, std::size_t n) {
  std::vector<BigInt> counts(n + 1);
  std::vector<Code> v(n, 0);
  while (true) {
    bool ortho = true;
    for (const auto& r : rows) {
      Code s = 0;
      for (std::size_t i = 0; i < n; ++i) s = f.add(s, f.mul(r[i], v[i]));
      if (s != 0) {
        ortho = false;
        break;
      }
    }
    if (ortho) {
      std::size_t w = 0;
      for (auto c : v) w += c != 0;
      ++counts[w];
    }
    std::size_t i = 0;
    while (i < n && ++v[i] == f.q) v[i++] = 0;
    if (i == n) break;
  }
  return counts;
}

/// Least primitive root mod p by brute-force order.
inline std::uint32_t least_primitive_root(std::uint32_t p) {
  for (std::uint32_t g = 1; g < p; ++g) {
    std::uint64_t x = g, k = 1;
    while (x != 1) {
      x = x * g % p;
      ++k;
    }
    if (k == p - 1) return g;
  }
  return 0;
}

}  // namespace oracle
