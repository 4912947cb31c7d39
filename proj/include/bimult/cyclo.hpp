#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bimult/errors.hpp"

namespace bimult {

/// Element of Q(zeta_p), coordinates in the basis 1, zeta, ..., zeta^(p-2)
/// modulo the p-th cyclotomic polynomial.  zeta^p = 1 and
/// 1 + zeta + ... + zeta^(p-1) = 0 hold identically; no floating point.
class CycloElem {
 public:
  CycloElem() = default;
  CycloElem(long p, std::vector<mpq_class> coeffs);

  static CycloElem zero(long p);
  static CycloElem one(long p);
  static CycloElem from_rational(long p, const mpq_class& q);
  static CycloElem zeta_pow(long p, long e);  ///< zeta^e, e reduced mod p

  long p() const { return p_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_value() const;  ///< throws when not rational

  CycloElem operator+(const CycloElem& o) const;
  CycloElem operator-(const CycloElem& o) const;
  CycloElem operator-() const;
  CycloElem operator*(const CycloElem& o) const;
  CycloElem operator*(const mpq_class& s) const;
  CycloElem inverse() const;
  bool operator==(const CycloElem& o) const;
  bool operator!=(const CycloElem& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  long p_ = 0;
  std::vector<mpq_class> c_;  // size p-1
};

/// The fixed injective character on Z/p: a -> zeta_p^a.
CycloElem psi(long p, long a);

/// Algebraic conjugation zeta -> zeta^(-1); conj(psi(a)) = psi(-a).
CycloElem conj(const CycloElem& z);

class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(long p, long rows, long cols);
  static CycloMatrix identity(long p, long n);

  long p() const { return p_; }
  long rows() const { return rows_; }
  long cols() const { return cols_; }
  CycloElem& at(long i, long j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const CycloElem& at(long i, long j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  CycloMatrix operator*(const CycloMatrix& o) const;
  CycloMatrix operator*(const CycloElem& s) const;
  CycloMatrix transpose() const;
  bool operator==(const CycloMatrix& o) const;
  bool operator!=(const CycloMatrix& o) const { return !(*this == o); }

 private:
  long p_ = 0;
  long rows_ = 0, cols_ = 0;
  std::vector<CycloElem> a_;
};

/// Exact inverse by Gauss-Jordan elimination; throws Singular.
CycloMatrix mat_inverse(const CycloMatrix& M);

}  // namespace bimult
