#pragma once

// Polynomials, matrices and vectors over the subfield F_q of a tower.

#include "optcyc/gf_tower.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace optcyc {

/// A word of F_q symbols; entry i is coordinate i.
using Codeword = std::vector<FqElement>;

/// Ascending-degree polynomial with no trailing zeros.
class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(std::vector<FqElement> coeffs);

  /// c x^degree
  static FqPoly monomial(FqElement c, std::size_t degree);
  /// x^n - 1
  static FqPoly x_n_minus_1(const BaseField& field, std::size_t n);

  const std::vector<FqElement>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  FqElement leading() const noexcept { return coeffs_.empty() ? FqElement{} : coeffs_.back(); }
  /// Coefficient of x^i, zero past the degree.
  FqElement operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FqElement{}; }

  friend bool operator==(const FqPoly&, const FqPoly&) = default;

 private:
  std::vector<FqElement> coeffs_;
};

FqPoly poly_add(const BaseField& f, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const BaseField& f, const FqPoly& a, const FqPoly& b);
FqPoly poly_mul(const BaseField& f, const FqPoly& a, const FqPoly& b);
FqPoly poly_scale(const BaseField& f, FqElement c, const FqPoly& a);
/// (quotient, remainder); throws DivisionByZeroPoly.
std::pair<FqPoly, FqPoly> poly_divrem(const BaseField& f, const FqPoly& a, const FqPoly& b);
/// Reduces a modulo x^n - 1 by folding exponents mod n.
FqPoly poly_mod_xn_minus_1(const BaseField& f, const FqPoly& a, std::size_t n);
/// Monic scaling; zero stays zero.
FqPoly poly_monic(const BaseField& f, const FqPoly& a);
/// Monic gcd; gcd(0, 0) = 0.
FqPoly poly_gcd(const BaseField& f, FqPoly a, FqPoly b);
/// Evaluates a subfield polynomial at an extension element.
Fq2Element poly_eval(const FieldTower& tower, const FqPoly& a, Fq2Element x);

/// "x^2+6x+3" style, highest degree first; "0" for zero.
std::string format_poly(const FqPoly& a);

FqPoly codeword_polynomial(const Codeword& v);
/// Coefficients 0..n-1 of a, as a length-n word.
Codeword polynomial_to_codeword(const FqPoly& a, std::size_t n);

/// Monic minimal polynomial over F_q of γ^{-a}.
FqPoly minimal_polynomial(const FieldTower& tower, std::int64_t a);

class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// All rows must share one length; cols is needed when rows is empty.
  static FqMatrix from_rows(const std::vector<Codeword>& rows, std::size_t cols);
  static FqMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FqElement& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  FqElement at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  std::span<const FqElement> row_view(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  Codeword row(std::size_t r) const { auto v = row_view(r); return {v.begin(), v.end()}; }
  std::vector<Codeword> row_list() const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FqElement> data_;
};

struct RrefResult {
  FqMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const BaseField& f, const FqMatrix& m);
std::size_t rank(const BaseField& f, const FqMatrix& m);
/// Basis of {v : M v^T = 0}, one row per free column in ascending order.
FqMatrix null_space(const BaseField& f, const FqMatrix& m);
/// True when v lies in the row space of m.
bool in_row_space(const BaseField& f, const FqMatrix& m, const Codeword& v);

std::size_t hamming_weight(const Codeword& v) noexcept;
/// Entry i moves to position (i + t) mod n.
Codeword cyclic_shift(const Codeword& v, std::int64_t t);
Codeword scalar_mul(const BaseField& f, FqElement alpha, const Codeword& v);
/// Throws LengthMismatch.
Codeword add_words(const BaseField& f, const Codeword& v, const Codeword& w);
/// Σ v_i w_i; throws LengthMismatch.
FqElement dot(const BaseField& f, const Codeword& v, const Codeword& w);

std::string format_word(const Codeword& v);

}  // namespace optcyc
