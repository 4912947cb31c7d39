#include "bimult/skew.hpp"

#include <sstream>

namespace bimult {

SkewPoly::SkewPoly(Field field, std::map<long, FFElem> terms)
    : field_(std::move(field)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

SkewPoly SkewPoly::constant(const Field& f, const FFElem& c) {
  SkewPoly r(f);
  if (!c.is_zero()) r.terms_.emplace(0, c);
  return r;
}

SkewPoly SkewPoly::phi_power(const Field& f, long k) {
  SkewPoly r(f);
  r.terms_.emplace(k, f.one());
  return r;
}

SkewPoly SkewPoly::monomial(const FFElem& coeff, long k) {
  SkewPoly r(coeff.field());
  if (!coeff.is_zero()) r.terms_.emplace(k, coeff);
  return r;
}

bool SkewPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long SkewPoly::min_exp() const {
  if (terms_.empty()) throw Error("zero skew polynomial has no exponent range");
  return terms_.begin()->first;
}

long SkewPoly::max_exp() const {
  if (terms_.empty()) throw Error("zero skew polynomial has no exponent range");
  return terms_.rbegin()->first;
}

FFElem SkewPoly::coeff(long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? field_.zero() : it->second;
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
  std::map<long, FFElem> t = terms_;
  for (const auto& [k, c] : o.terms_) {
    auto it = t.find(k);
    if (it == t.end()) {
      t.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) t.erase(it);
    }
  }
  SkewPoly r(field_);
  r.terms_ = std::move(t);
  return r;
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::operator-() const {
  SkewPoly r(field_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
  // (a Phi^i)(b Phi^j) = a b^(p^i) Phi^(i+j)
  SkewPoly r(field_);
  for (const auto& [i, a] : terms_)
    for (const auto& [j, b] : o.terms_) {
      FFElem c = a * frobenius(b, i);
      if (c.is_zero()) continue;
      auto it = r.terms_.find(i + j);
      if (it == r.terms_.end()) {
        r.terms_.emplace(i + j, c);
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

bool SkewPoly::operator==(const SkewPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (auto it1 = terms_.begin(), it2 = o.terms_.begin(); it1 != terms_.end(); ++it1, ++it2)
    if (it1->first != it2->first || it1->second != it2->second) return false;
  return true;
}

SkewPoly SkewPoly::phi_shift_left(long k) const {
  SkewPoly r(field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, frobenius(c, k));
  return r;
}

std::string SkewPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool unit = c == field_.one();
    if (k == 0) {
      os << (c.in_prime_subfield() ? c.to_string() : "(" + c.to_string() + ")");
      continue;
    }
    if (!unit) {
      os << (c.in_prime_subfield() ? c.to_string() : "(" + c.to_string() + ")") << "*";
    }
    os << "F";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

SkewPoly adjoint(const SkewPoly& f) {
  SkewPoly r(f.field());
  std::map<long, FFElem> t;
  for (const auto& [k, c] : f.terms()) t.emplace(-k, frobenius(c, -k));
  return SkewPoly(f.field(), std::move(t));
}

FFElem evaluate(const SkewPoly& f, const FFElem& x) {
  Field K = x.field();
  if (K.n() % f.field().n() != 0 || K.p() != f.field().p())
    throw NoEmbedding("coefficients of " + f.to_string() + " do not embed into the point field");
  FFElem acc = K.zero();
  for (const auto& [k, c] : f.terms()) acc = acc + embed(c, K) * frobenius(x, k);
  return acc;
}

GForm g_form(const SkewPoly& f) {
  std::vector<GForm::Monomial> mons;
  for (const auto& [n, a] : f.terms()) {
    if (n > 0) {
      for (long i = 1; i <= n; ++i) mons.push_back({frobenius(a, -i), n - i, -i});
    } else if (n < 0) {
      for (long j = 0; j <= -n - 1; ++j) mons.push_back({-frobenius(a, j), n + j, j});
    }
    // n = 0 contributes nothing
  }
  return GForm(f.field(), std::move(mons));
}

FFElem GForm::eval(const FFElem& x, const FFElem& y) const {
  Field K = x.field();
  FFElem acc = K.zero();
  for (const auto& m : monomials_)
    acc = acc + embed(m.coeff, K) * frobenius(x, m.xe) * frobenius(y, m.ye);
  return acc;
}

// ---------------------------------------------------------------------------

SkewMatrix::SkewMatrix(Field field, long rows, long cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      a_(static_cast<size_t>(rows) * cols, SkewPoly::zero(field_)) {}

bool SkewMatrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

bool SkewMatrix::is_diagonal() const {
  if (rows_ != cols_) return false;
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

SkewMatrix SkewMatrix::adjoint_transpose() const {
  SkewMatrix r(field_, cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = adjoint(at(i, j));
  return r;
}

SkewMatrix SkewMatrix::operator*(const SkewMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch");
  SkewMatrix r(field_, rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (long j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

bool SkewMatrix::operator==(const SkewMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!(a_[i] == o.a_[i])) return false;
  return true;
}

std::vector<FFElem> SkewMatrix::apply(const std::vector<FFElem>& x) const {
  if (static_cast<long>(x.size()) != cols_) throw Error("point dimension mismatch");
  Field K = x.empty() ? field_ : x[0].field();
  std::vector<FFElem> y(rows_, K.zero());
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      y[i] = y[i] + evaluate(at(i, j), x[j]);
    }
  return y;
}

std::string SkewMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (long i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (long j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string();
    }
  }
  os << "]";
  return os.str();
}

FFElem g_eval_matrix(const SkewMatrix& F, const std::vector<FFElem>& x,
                     const std::vector<FFElem>& y) {
  if (static_cast<long>(x.size()) != F.cols() || static_cast<long>(y.size()) != F.rows())
    throw Error("point dimension mismatch");
  Field K = x.empty() ? (y.empty() ? F.field() : y[0].field()) : x[0].field();
  FFElem acc = K.zero();
  for (long j = 0; j < F.rows(); ++j)
    for (long i = 0; i < F.cols(); ++i) {
      if (F.at(j, i).is_zero()) continue;
      acc = acc + g_form(F.at(j, i)).eval(x[i], y[j]);
    }
  return acc;
}

}  // namespace bimult
