#include "bimult/heisenberg.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace bimult {

namespace {

using PointKey = std::vector<std::vector<long>>;

PointKey key_of(const std::vector<FFElem>& pt) {
  PointKey k;
  k.reserve(pt.size());
  for (const auto& c : pt) k.push_back(c.coeffs());
  return k;
}

struct LabelGroup {
  std::vector<std::vector<FFElem>> pts;
  std::map<PointKey, long> index;
  std::vector<std::vector<long>> add;  // dense addition table
  std::vector<long> neg;
  long zero = -1;

  void build(const std::vector<std::vector<FFElem>>& labels) {
    pts = labels;
    long n = static_cast<long>(pts.size());
    for (long i = 0; i < n; ++i) index.emplace(key_of(pts[i]), i);
    if (static_cast<long>(index.size()) != n)
      throw LabelMismatch("duplicate labels in a component group");
    add.assign(n, std::vector<long>(n, -1));
    neg.assign(n, -1);
    for (long i = 0; i < n; ++i) {
      bool is_zero = true;
      for (const auto& c : pts[i]) is_zero = is_zero && c.is_zero();
      if (is_zero) zero = i;
      for (long j = 0; j < n; ++j) {
        std::vector<FFElem> s = pts[i];
        for (size_t c = 0; c < s.size(); ++c) s[c] = s[c] + pts[j][c];
        auto it = index.find(key_of(s));
        if (it == index.end())
          throw LabelMismatch("label set is not closed under addition");
        add[i][j] = it->second;
      }
    }
    if (zero < 0) throw LabelMismatch("label set has no zero element");
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        if (add[i][j] == zero) neg[i] = j;
  }
};

}  // namespace

struct HeisenbergGroup::Impl {
  PairingTable table;
  LabelGroup k1, k2;
  long p = 0;
};

HeisenbergGroup::HeisenbergGroup(PairingTable table) {
  auto impl = std::make_shared<Impl>();
  impl->p = table.p;
  impl->k1.build(table.left_labels);
  impl->k2.build(table.right_labels);
  impl->table = std::move(table);
  impl_ = impl;

  // verify the group axioms: exhaustively within the ceiling, sampled above
  unsigned long long n = order();
  auto check_assoc = [&](const GroupElem& x, const GroupElem& y, const GroupElem& z) {
    if (!(mul(mul(x, y), z) == mul(x, mul(y, z))))
      throw InternalInvariant("Heisenberg multiplication is not associative");
  };
  if (n * n * n <= 1'000'000ULL) {
    for (unsigned long long a = 0; a < n; ++a)
      for (unsigned long long b = 0; b < n; ++b)
        for (unsigned long long c = 0; c < n; ++c)
          check_assoc(element_at(a), element_at(b), element_at(c));
  } else {
    std::mt19937_64 rng(0x5eed);
    for (int it = 0; it < 20000; ++it)
      check_assoc(element_at(rng() % n), element_at(rng() % n), element_at(rng() % n));
  }
  for (unsigned long long a = 0; a < std::min<unsigned long long>(n, 4096); ++a) {
    GroupElem x = element_at(a);
    if (!(mul(x, identity()) == x) || !(mul(identity(), x) == x))
      throw InternalInvariant("Heisenberg identity element failed");
    GroupElem xi = inv(x);
    if (!(mul(x, xi) == identity()) || !(mul(xi, x) == identity()))
      throw InternalInvariant("Heisenberg inverse failed");
  }
}

long HeisenbergGroup::p() const { return impl_->p; }
const PairingTable& HeisenbergGroup::table() const { return impl_->table; }
long HeisenbergGroup::k1_size() const { return static_cast<long>(impl_->k1.pts.size()); }
long HeisenbergGroup::k2_size() const { return static_cast<long>(impl_->k2.pts.size()); }

unsigned long long HeisenbergGroup::order() const {
  return static_cast<unsigned long long>(k1_size()) * k2_size() * impl_->p;
}

GroupElem HeisenbergGroup::mul(const GroupElem& x, const GroupElem& y) const {
  // (b1,b2,a)(b1',b2',a') = (b1+b1', b2+b2', a+a'+B(b1,b2'))
  return {impl_->k1.add[x.i][y.i], impl_->k2.add[x.j][y.j],
          (x.a + y.a + impl_->table.values[x.i][y.j]) % impl_->p};
}

GroupElem HeisenbergGroup::inv(const GroupElem& x) const {
  long ni = impl_->k1.neg[x.i], nj = impl_->k2.neg[x.j];
  long a = ((-x.a + impl_->table.values[x.i][x.j]) % impl_->p + impl_->p) % impl_->p;
  return {ni, nj, a};
}

long HeisenbergGroup::k1_zero() const { return impl_->k1.zero; }
long HeisenbergGroup::k2_zero() const { return impl_->k2.zero; }
long HeisenbergGroup::k1_add(long a, long b) const { return impl_->k1.add[a][b]; }
long HeisenbergGroup::k2_add(long a, long b) const { return impl_->k2.add[a][b]; }
long HeisenbergGroup::k1_neg(long a) const { return impl_->k1.neg[a]; }
long HeisenbergGroup::k2_neg(long a) const { return impl_->k2.neg[a]; }
long HeisenbergGroup::pairing(long i, long j) const { return impl_->table.values[i][j]; }

GroupElem HeisenbergGroup::element_at(unsigned long long idx) const {
  long p = impl_->p;
  long a = static_cast<long>(idx % p);
  idx /= p;
  long j = static_cast<long>(idx % k2_size());
  idx /= k2_size();
  return {static_cast<long>(idx), j, a};
}

bool HeisenbergGroup::is_central(const GroupElem& x) const {
  unsigned long long n = order();
  for (unsigned long long t = 0; t < n; ++t) {
    GroupElem y = element_at(t);
    if (!(mul(x, y) == mul(y, x))) return false;
  }
  return true;
}

unsigned long long HeisenbergGroup::center_order() const {
  unsigned long long n = order(), c = 0;
  for (unsigned long long t = 0; t < n; ++t)
    if (is_central(element_at(t))) ++c;
  return c;
}

HeisenbergGroup build_group(const KernelData& K1, const KernelData& K2, const PairingTable& B) {
  if (K1.pi0_size() != static_cast<unsigned long long>(B.left_size()) ||
      K2.pi0_size() != static_cast<unsigned long long>(B.right_size()))
    throw LabelMismatch("kernel component groups do not match the pairing table labels");
  // each label must be a kernel representative of the matching side; the
  // label lists are the kernels' point groups embedded in the common field
  return HeisenbergGroup(B);
}

// ---------------------------------------------------------------------------

MonomialMatrix MonomialMatrix::identity(long n) {
  MonomialMatrix m;
  m.perm.resize(n);
  m.phase.assign(n, 0);
  for (long i = 0; i < n; ++i) m.perm[i] = i;
  return m;
}

MonomialMatrix MonomialMatrix::compose(const MonomialMatrix& rhs, long p) const {
  // (this * rhs) e_b = this(zeta^{rhs.phase[b]} e_{rhs.perm[b]})
  MonomialMatrix r;
  long n = dim();
  r.perm.resize(n);
  r.phase.resize(n);
  for (long b = 0; b < n; ++b) {
    r.perm[b] = perm[rhs.perm[b]];
    r.phase[b] = (rhs.phase[b] + phase[rhs.perm[b]]) % p;
  }
  return r;
}

CycloMatrix MonomialMatrix::to_cyclo(long p) const {
  long n = dim();
  CycloMatrix m(p, n, n);
  for (long b = 0; b < n; ++b) m.at(perm[b], b) = psi(p, phase[b]);
  return m;
}

std::vector<long> MonomialMatrix::trace_counts(long p) const {
  std::vector<long> counts(p, 0);
  for (long b = 0; b < dim(); ++b)
    if (perm[b] == b) ++counts[phase[b]];
  return counts;
}

// ---------------------------------------------------------------------------

Rep::Rep(HeisenbergGroup group, long dim, std::string model_name,
         std::function<MonomialMatrix(const GroupElem&)> at)
    : group_(std::move(group)), dim_(dim), model_name_(std::move(model_name)), at_(std::move(at)) {}

namespace {

void verify_homomorphism(const Rep& R, long u) {
  const HeisenbergGroup& G = R.group();
  long p = G.p();
  unsigned long long n = G.order();
  auto check = [&](const GroupElem& g, const GroupElem& h) {
    MonomialMatrix lhs = R.at(g).compose(R.at(h), p);
    MonomialMatrix rhs = R.at(G.mul(g, h));
    if (!(lhs == rhs)) throw InternalInvariant("representation is not a homomorphism");
  };
  if (n <= static_cast<unsigned long long>(limits().max_group_order)) {
    for (unsigned long long a = 0; a < n; ++a)
      for (unsigned long long b = 0; b < n; ++b) check(G.element_at(a), G.element_at(b));
  } else {
    std::mt19937_64 rng(0xabcd);
    for (int it = 0; it < 10000; ++it) check(G.element_at(rng() % n), G.element_at(rng() % n));
  }
  // central character: rho(0,0,a) = psi(ua) I
  for (long a = 0; a < p; ++a) {
    MonomialMatrix m = R.at({G.k1_zero(), G.k2_zero(), a});
    for (long b = 0; b < m.dim(); ++b)
      if (m.perm[b] != b || m.phase[b] != (u * a) % p)
        throw InternalInvariant("central character is not psi^u");
  }
}

}  // namespace

Rep svn_rep(const HeisenbergGroup& G, RepModel model, long psi_exponent) {
  long p = G.p();
  long u = ((psi_exponent % p) + p) % p;
  if (u == 0 || std::gcd(u, p) != 1) throw Error("psi exponent must be a unit mod p");
  Rep r = [&]() -> Rep {
    if (model == RepModel::X) {
      long dim = G.k2_size();
      auto at = [G, p, u, dim](const GroupElem& g) {
        MonomialMatrix m;
        m.perm.resize(dim);
        m.phase.resize(dim);
        for (long b = 0; b < dim; ++b) {
          m.perm[b] = G.k2_add(b, G.k2_neg(g.j));  // b - k2
          m.phase[b] = ((u * (g.a - G.pairing(g.i, b))) % p + p) % p;
        }
        return m;
      };
      return Rep(G, dim, "X", at);
    }
    long dim = G.k1_size();
    auto at = [G, p, u, dim](const GroupElem& g) {
      MonomialMatrix m;
      m.perm.resize(dim);
      m.phase.resize(dim);
      for (long c = 0; c < dim; ++c) {
        m.perm[c] = G.k1_add(c, G.k1_neg(g.i));  // c - k1
        m.phase[c] = ((u * (g.a + G.pairing(c, g.j) - G.pairing(g.i, g.j))) % p + p) % p;
      }
      return m;
    };
    return Rep(G, dim, "Y", at);
  }();
  verify_homomorphism(r, u);
  return r;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  long da = a.dim(), db = b.dim();
  auto at = [a, b, da, db](const GroupElem& g) {
    MonomialMatrix ma = a.at(g), mb = b.at(g);
    MonomialMatrix m;
    m.perm.resize(da + db);
    m.phase.resize(da + db);
    for (long i = 0; i < da; ++i) {
      m.perm[i] = ma.perm[i];
      m.phase[i] = ma.phase[i];
    }
    for (long i = 0; i < db; ++i) {
      m.perm[da + i] = da + mb.perm[i];
      m.phase[da + i] = mb.phase[i];
    }
    return m;
  };
  return Rep(a.group(), da + db, a.model_name() + "+" + b.model_name(), at);
}

Rep tensor(const Rep& a, const Rep& b) {
  long da = a.dim(), db = b.dim();
  long p = a.group().p();
  auto at = [a, b, da, db, p](const GroupElem& g) {
    MonomialMatrix ma = a.at(g), mb = b.at(g);
    MonomialMatrix m;
    m.perm.resize(da * db);
    m.phase.resize(da * db);
    for (long i = 0; i < da; ++i)
      for (long j = 0; j < db; ++j) {
        m.perm[i * db + j] = ma.perm[i] * db + mb.perm[j];
        m.phase[i * db + j] = (ma.phase[i] + mb.phase[j]) % p;
      }
    return m;
  };
  return Rep(a.group(), da * db, a.model_name() + "x" + b.model_name(), at);
}

Rep dual(const Rep& a) {
  long d = a.dim();
  const HeisenbergGroup G = a.group();
  auto at = [a, d, G](const GroupElem& g) {
    MonomialMatrix m0 = a.at(G.inv(g));  // transpose of rho(g^-1)
    MonomialMatrix m;
    m.perm.resize(d);
    m.phase.resize(d);
    for (long b = 0; b < d; ++b) {
      m.perm[m0.perm[b]] = b;
      m.phase[m0.perm[b]] = m0.phase[b];
    }
    return m;
  };
  return Rep(a.group(), d, a.model_name() + "*", at);
}

IrreducibilityCertificate verify_irreducible(const Rep& R) {
  const HeisenbergGroup& G = R.group();
  long p = G.p();
  unsigned long long n = G.order();
  if (n > static_cast<unsigned long long>(limits().max_group_order) * 64)
    throw CeilingExceeded("group too large for the exact Schur sum");
  CycloElem total = CycloElem::zero(p);
  for (unsigned long long t = 0; t < n; ++t) {
    auto counts = R.at(G.element_at(t)).trace_counts(p);
    CycloElem tr = CycloElem::zero(p);
    for (long r = 0; r < p; ++r)
      if (counts[r] != 0) tr = tr + CycloElem::zeta_pow(p, r) * counts[r];
    total = total + tr * conj(tr);
  }
  IrreducibilityCertificate cert;
  cert.schur_sum = total;
  cert.group_order = n;
  cert.irreducible = (total == CycloElem::from_rational(p, static_cast<unsigned long>(n)));
  return cert;
}

DecompositionReport brute_force_decompose(const Rep& R) {
  const HeisenbergGroup& G = R.group();
  unsigned long long n = G.order();
  if (n > static_cast<unsigned long long>(limits().max_group_order))
    throw CeilingExceeded("group order " + std::to_string(n) +
                          " above the decomposition ceiling");
  IrreducibilityCertificate base = verify_irreducible(R);
  mpq_class s = base.schur_sum.rational_value() / static_cast<unsigned long>(n);
  if (s.get_den() != 1) throw InternalInvariant("Schur sum is not divisible by the group order");

  DecompositionReport rep;
  rep.schur_integer = s.get_num().get_ui();
  rep.dim = R.dim();
  rep.regular_inner = R.dim();  // <chi, chi_reg> = chi(e)

  // central behavior decides what the Schur integer determines
  MonomialMatrix z = R.at({G.k1_zero(), G.k2_zero(), 1});
  bool scalar = true;
  for (long b = 0; b < z.dim(); ++b)
    scalar = scalar && z.perm[b] == b && z.phase[b] == z.phase[0];
  if (scalar && z.dim() > 0 && z.phase[0] != 0) {
    // generic central character: every constituent is the unique
    // Stone-von-Neumann representation of dimension |pi0|
    long d0 = G.k1_size();
    if (rep.dim % d0 == 0) {
      long m = rep.dim / d0;
      if (rep.schur_integer == static_cast<unsigned long long>(m) * m) {
        rep.multiplicities.assign(1, m);
        rep.inferred = true;
      }
    }
  } else if (scalar && z.dim() > 0 && z.phase[0] == 0) {
    // trivial central character: constituents are one-dimensional
    if (rep.schur_integer == static_cast<unsigned long long>(rep.dim)) {
      rep.multiplicities.assign(rep.dim, 1);
      rep.inferred = true;
    }
  }
  return rep;
}

}  // namespace bimult
