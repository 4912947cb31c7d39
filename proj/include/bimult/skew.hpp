#pragma once

#include <map>
#include <string>
#include <vector>

#include "bimult/ff.hpp"

namespace bimult {

/// Twisted Laurent polynomial Sum a_k Phi^k over a finite field, with the
/// multiplication rule Phi a = a^p Phi.  Phi acts on points as x -> x^p;
/// because Frobenius is invertible here, negative exponents and fractional
/// p-powers of coefficients are total operations.
class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(Field field) : field_(std::move(field)) {}
  SkewPoly(Field field, std::map<long, FFElem> terms);

  static SkewPoly zero(const Field& f) { return SkewPoly(f); }
  static SkewPoly constant(const Field& f, const FFElem& c);
  static SkewPoly phi_power(const Field& f, long k);  ///< Phi^k
  static SkewPoly monomial(const FFElem& coeff, long k);

  const Field& field() const { return field_; }
  const std::map<long, FFElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// min/max exponent; undefined (throws) for the zero polynomial, which has
  /// no exponent range.  Callers branch on is_zero() explicitly.
  long min_exp() const;
  long max_exp() const;
  long span() const { return max_exp() - min_exp(); }

  FFElem coeff(long k) const;  ///< zero when absent

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-(const SkewPoly& o) const;
  SkewPoly operator-() const;
  SkewPoly operator*(const SkewPoly& o) const;
  bool operator==(const SkewPoly& o) const;
  bool operator!=(const SkewPoly& o) const { return !(*this == o); }

  /// Phi^k * this (a unit multiple; shifts the exponent range by k).
  SkewPoly phi_shift_left(long k) const;

  std::string to_string() const;  ///< canonical ascending-exponent form

 private:
  Field field_;
  std::map<long, FFElem> terms_;  // exponent -> nonzero coefficient
};

/// The involution Sum a_k Phi^k -> Sum a_k^(p^-k) Phi^-k.
SkewPoly adjoint(const SkewPoly& f);

/// Sum a_k x^(p^k), with negative k through the inverse automorphism.
/// x must live in a field the coefficients embed into.
FFElem evaluate(const SkewPoly& f, const FFElem& x);

/// The biadditive form g with g(x,y)^p - g(x,y) = f(x) y - x f*(y) and
/// g(0,0) = 0, realized by its closed monomial formula and extended
/// additively in f.
class GForm {
 public:
  struct Monomial {
    FFElem coeff;  // in the coefficient field of f
    long xe;       // x^(p^xe)
    long ye;       // y^(p^ye)
  };

  GForm() = default;
  GForm(Field field, std::vector<Monomial> monomials)
      : field_(std::move(field)), monomials_(std::move(monomials)) {}

  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// g(x, y); x and y must live in a common field over the coefficients.
  FFElem eval(const FFElem& x, const FFElem& y) const;

 private:
  Field field_;
  std::vector<Monomial> monomials_;
};

GForm g_form(const SkewPoly& f);

/// Rectangular matrix of skew polynomials over a common field, acting on
/// points by x |-> (Sum_i entry(j,i)(x_i))_j.
class SkewMatrix {
 public:
  SkewMatrix() = default;
  SkewMatrix(Field field, long rows, long cols);

  const Field& field() const { return field_; }
  long rows() const { return rows_; }
  long cols() const { return cols_; }
  SkewPoly& at(long i, long j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const SkewPoly& at(long i, long j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;  ///< square with all off-diagonal entries zero

  /// The entrywise-adjoint transpose F*, satisfying
  /// <F(x), y> = x-pairing with F*(y) up to the g-form defining equation.
  SkewMatrix adjoint_transpose() const;

  SkewMatrix operator*(const SkewMatrix& o) const;
  bool operator==(const SkewMatrix& o) const;

  /// F applied to a point of G_a^cols (coordinates in a common field).
  std::vector<FFElem> apply(const std::vector<FFElem>& x) const;

  std::string to_string() const;

 private:
  Field field_;
  long rows_ = 0, cols_ = 0;
  std::vector<SkewPoly> a_;
};

/// g_F(x, y) = Sum_{j,i} g_{F(j,i)}(x_i, y_j); biadditive, and
/// g_F(x,y)^p - g_F(x,y) = <F(x), y> - <x, F*(y)>.
FFElem g_eval_matrix(const SkewMatrix& F, const std::vector<FFElem>& x,
                     const std::vector<FFElem>& y);

}  // namespace bimult
