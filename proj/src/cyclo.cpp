#include "bimult/cyclo.hpp"

#include <sstream>

namespace bimult {

CycloElem::CycloElem(long p, std::vector<mpq_class> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (static_cast<long>(c_.size()) != p_ - 1) throw Error("cyclotomic coefficient length mismatch");
}

CycloElem CycloElem::zero(long p) { return CycloElem(p, std::vector<mpq_class>(p - 1, 0)); }

CycloElem CycloElem::one(long p) { return from_rational(p, 1); }

CycloElem CycloElem::from_rational(long p, const mpq_class& q) {
  std::vector<mpq_class> c(p - 1, 0);
  c[0] = q;
  return CycloElem(p, std::move(c));
}

CycloElem CycloElem::zeta_pow(long p, long e) {
  e = ((e % p) + p) % p;
  std::vector<mpq_class> c(p - 1, 0);
  if (e < p - 1) {
    c[e] = 1;
  } else {
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
    for (auto& x : c) x = -1;
  }
  return CycloElem(p, std::move(c));
}

bool CycloElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class CycloElem::rational_value() const {
  if (!is_rational()) throw Error("cyclotomic value is not rational: " + to_string());
  return c_[0];
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
  std::vector<mpq_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return CycloElem(p_, std::move(r));
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
  std::vector<mpq_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
  return CycloElem(p_, std::move(r));
}

CycloElem CycloElem::operator-() const {
  std::vector<mpq_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return CycloElem(p_, std::move(r));
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
  long d = p_ - 1;
  // convolve, then fold zeta^k for k >= p-1 using zeta^p = 1 and
  // zeta^(p-1) = -(1 + ... + zeta^(p-2))
  std::vector<mpq_class> h(2 * d - 1, 0);
  for (long i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < d; ++j) h[i + j] += c_[i] * o.c_[j];
  }
  std::vector<mpq_class> r(d, 0);
  for (long k = 0; k < 2 * d - 1; ++k) {
    if (h[k] == 0) continue;
    if (k < d) {
      r[k] += h[k];
    } else if (k == d) {  // k = p-1
      for (long i = 0; i < d; ++i) r[i] -= h[k];
    } else {  // p <= k <= 2p-4: zeta^k = zeta^(k-p)
      r[k - p_] += h[k];
    }
  }
  return CycloElem(p_, std::move(r));
}

CycloElem CycloElem::operator*(const mpq_class& s) const {
  std::vector<mpq_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return CycloElem(p_, std::move(r));
}

namespace {

using QPoly = std::vector<mpq_class>;  // constant first

void qtrim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly h(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) h[i + j] += a[i] * b[j];
  qtrim(h);
  return h;
}

// a = q*b + r
void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class c = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = c;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    qtrim(a);
    if (a.size() < b.size()) break;
  }
  qtrim(q);
  r = std::move(a);
}

}  // namespace

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw Singular("inverse of zero cyclotomic element");
  // extended Euclid in Q[x] against the cyclotomic polynomial 1 + x + ... + x^(p-1)
  QPoly m(p_, 1);
  QPoly a(c_.begin(), c_.end());
  qtrim(a);
  QPoly r0 = m, r1 = a;
  QPoly s0 = {}, s1 = {1};
  while (!r1.empty()) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly qs = qmul(q, s1);
    QPoly ns(std::max(s0.size(), qs.size()), 0);
    for (size_t i = 0; i < ns.size(); ++i) {
      if (i < s0.size()) ns[i] += s0[i];
      if (i < qs.size()) ns[i] -= qs[i];
    }
    qtrim(ns);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  if (r0.size() != 1) throw Singular("element is a zero divisor (unreachable for prime p)");
  std::vector<mpq_class> out(p_ - 1, 0);
  for (size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = s0[i] / r0[0];
  return CycloElem(p_, std::move(out));
}

bool CycloElem::operator==(const CycloElem& o) const { return p_ == o.p_ && c_ == o.c_; }

std::string CycloElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CycloElem psi(long p, long a) { return CycloElem::zeta_pow(p, a); }

CycloElem conj(const CycloElem& z) {
  long p = z.p();
  CycloElem r = CycloElem::zero(p);
  for (long i = 0; i < p - 1; ++i) {
    if (z.coeffs()[i] == 0) continue;
    r = r + CycloElem::zeta_pow(p, -i) * z.coeffs()[i];
  }
  return r;
}

// ---------------------------------------------------------------------------

CycloMatrix::CycloMatrix(long p, long rows, long cols)
    : p_(p), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, CycloElem::zero(p)) {}

CycloMatrix CycloMatrix::identity(long p, long n) {
  CycloMatrix m(p, n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = CycloElem::one(p);
  return m;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch");
  CycloMatrix r(p_, rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const CycloElem& x = at(i, k);
      if (x.is_zero()) continue;
      for (long j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + x * o.at(k, j);
    }
  return r;
}

CycloMatrix CycloMatrix::operator*(const CycloElem& s) const {
  CycloMatrix r(p_, rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * s;
  return r;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix r(p_, cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool CycloMatrix::operator==(const CycloMatrix& o) const {
  return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

CycloMatrix mat_inverse(const CycloMatrix& M) {
  if (M.rows() != M.cols()) throw Error("inverse of non-square matrix");
  long n = M.rows();
  CycloMatrix a = M;
  CycloMatrix inv = CycloMatrix::identity(M.p(), n);
  for (long c = 0; c < n; ++c) {
    long sel = -1;
    for (long i = c; i < n; ++i)
      if (!a.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) throw Singular("matrix is singular");
    if (sel != c)
      for (long j = 0; j < n; ++j) {
        std::swap(a.at(sel, j), a.at(c, j));
        std::swap(inv.at(sel, j), inv.at(c, j));
      }
    CycloElem piv = a.at(c, c).inverse();
    for (long j = 0; j < n; ++j) {
      a.at(c, j) = a.at(c, j) * piv;
      inv.at(c, j) = inv.at(c, j) * piv;
    }
    for (long i = 0; i < n; ++i) {
      if (i == c || a.at(i, c).is_zero()) continue;
      CycloElem f = a.at(i, c);
      for (long j = 0; j < n; ++j) {
        a.at(i, j) = a.at(i, j) - f * a.at(c, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(c, j);
      }
    }
  }
  return inv;
}

}  // namespace bimult
