#include "optcyc/fq_linalg.hpp"

#include "optcyc/errors.hpp"

#include <algorithm>

namespace optcyc {

namespace {

void trim(std::vector<FqElement>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

FqPoly::FqPoly(std::vector<FqElement> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

FqPoly FqPoly::monomial(FqElement c, std::size_t degree) {
  std::vector<FqElement> v(degree + 1);
  v[degree] = c;
  return FqPoly(std::move(v));
}

FqPoly FqPoly::x_n_minus_1(const BaseField& field, std::size_t n) {
  std::vector<FqElement> v(n + 1);
  v[0] = field.neg({1});
  v[n] = field.add(v[n], {1});
  return FqPoly(std::move(v));
}

FqPoly poly_add(const BaseField& f, const FqPoly& a, const FqPoly& b) {
  std::vector<FqElement> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a[i], b[i]);
  return FqPoly(std::move(out));
}

FqPoly poly_sub(const BaseField& f, const FqPoly& a, const FqPoly& b) {
  std::vector<FqElement> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return FqPoly(std::move(out));
}

FqPoly poly_mul(const BaseField& f, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FqElement> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  return FqPoly(std::move(out));
}

FqPoly poly_scale(const BaseField& f, FqElement c, const FqPoly& a) {
  std::vector<FqElement> out(a.coeffs());
  for (auto& x : out) x = f.mul(c, x);
  return FqPoly(std::move(out));
}

std::pair<FqPoly, FqPoly> poly_divrem(const BaseField& f, const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "polynomial division by zero");
  if (a.degree() < b.degree()) return {FqPoly{}, a};
  std::vector<FqElement> rem(a.coeffs());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<FqElement> quot(rem.size() - db);
  const FqElement lead_inv = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    const FqElement factor = f.mul(rem[i], lead_inv);
    quot[i - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(factor, b[j]));
    }
  }
  rem.resize(db);
  return {FqPoly(std::move(quot)), FqPoly(std::move(rem))};
}

FqPoly poly_mod_xn_minus_1(const BaseField& f, const FqPoly& a, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "x^0 - 1 is the zero polynomial");
  std::vector<FqElement> out(n);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i % n] = f.add(out[i % n], a[i]);
  return FqPoly(std::move(out));
}

FqPoly poly_monic(const BaseField& f, const FqPoly& a) {
  if (a.is_zero()) return a;
  return poly_scale(f, f.inv(a.leading()), a);
}

FqPoly poly_gcd(const BaseField& f, FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = poly_divrem(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

Fq2Element poly_eval(const FieldTower& tower, const FqPoly& a, Fq2Element x) {
  Fq2Element acc;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    acc = tower.add(tower.mul(acc, x), tower.embed(a[i]));
  }
  return acc;
}

std::string format_poly(const FqPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const FqElement c = a[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c.code != 1) out += std::to_string(c.code);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

FqPoly codeword_polynomial(const Codeword& v) { return FqPoly(v); }

Codeword polynomial_to_codeword(const FqPoly& a, std::size_t n) {
  Codeword out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i];
  return out;
}

FqPoly minimal_polynomial(const FieldTower& tower, std::int64_t a) {
  const BaseField& f = tower.base();
  const Fq2Element root = tower.gamma_pow(-a);
  if (tower.subfield_membership(root).member) {
    return FqPoly({f.neg(tower.restrict_to_subfield(root)), FqElement{1}});
  }
  // (x - r)(x - r^q) = x^2 - Tr(r) x + N(r)
  return FqPoly({tower.norm(root), f.neg(tower.trace(root)), FqElement{1}});
}

FqMatrix FqMatrix::from_rows(const std::vector<Codeword>& rows, std::size_t cols) {
  FqMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::LengthMismatch, "ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

FqMatrix FqMatrix::identity(std::size_t n) {
  FqMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FqElement{1};
  return m;
}

std::vector<Codeword> FqMatrix::row_list() const {
  std::vector<Codeword> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

RrefResult rref(const BaseField& f, const FqMatrix& input) {
  RrefResult res{input, 0, {}};
  FqMatrix& m = res.reduced;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    }
    const FqElement inv = f.inv(m.at(lead, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(lead, j) = f.mul(inv, m.at(lead, j));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m.at(r, c).is_zero()) continue;
      const FqElement factor = m.at(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(lead, j)));
      }
    }
    res.pivot_columns.push_back(c);
    ++lead;
  }
  res.rank = lead;
  return res;
}

std::size_t rank(const BaseField& f, const FqMatrix& m) { return rref(f, m).rank; }

FqMatrix null_space(const BaseField& f, const FqMatrix& m) {
  const RrefResult r = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  std::vector<Codeword> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Codeword v(m.cols());
    v[free] = FqElement{1};
    for (std::size_t i = 0; i < r.rank; ++i) {
      v[r.pivot_columns[i]] = f.neg(r.reduced.at(i, free));
    }
    basis.push_back(std::move(v));
  }
  return FqMatrix::from_rows(basis, m.cols());
}

bool in_row_space(const BaseField& f, const FqMatrix& m, const Codeword& v) {
  std::vector<Codeword> rows = m.row_list();
  rows.push_back(v);
  return rank(f, FqMatrix::from_rows(rows, m.cols())) == rank(f, m);
}

std::size_t hamming_weight(const Codeword& v) noexcept {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](FqElement x) { return !x.is_zero(); }));
}

Codeword cyclic_shift(const Codeword& v, std::int64_t t) {
  const auto n = static_cast<std::int64_t>(v.size());
  Codeword out(v.size());
  if (n == 0) return out;
  const std::int64_t s = ((t % n) + n) % n;
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>((i + s) % n)] = v[static_cast<std::size_t>(i)];
  return out;
}

Codeword scalar_mul(const BaseField& f, FqElement alpha, const Codeword& v) {
  Codeword out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(alpha, v[i]);
  return out;
}

Codeword add_words(const BaseField& f, const Codeword& v, const Codeword& w) {
  if (v.size() != w.size()) throw Error(Errc::LengthMismatch, "word lengths differ");
  Codeword out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.add(v[i], w[i]);
  return out;
}

FqElement dot(const BaseField& f, const Codeword& v, const Codeword& w) {
  if (v.size() != w.size()) throw Error(Errc::LengthMismatch, "word lengths differ");
  FqElement acc{};
  for (std::size_t i = 0; i < v.size(); ++i) acc = f.add(acc, f.mul(v[i], w[i]));
  return acc;
}

std::string format_word(const Codeword& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i].code);
  }
  return out;
}

}  // namespace optcyc
