#include "bimult/kernel.hpp"

#include <algorithm>
#include <numeric>

#include "ipoly.hpp"

namespace bimult {

namespace {

unsigned long long pow_check(long p, long e) {
  unsigned long long r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > (1ULL << 62) / static_cast<unsigned long long>(p))
      throw CeilingExceeded("p^" + std::to_string(e) + " exceeds the integer range");
    r *= static_cast<unsigned long long>(p);
  }
  return r;
}

// saturating lcm; anything past 2^62 is far beyond every materialization
// ceiling anyway
unsigned long long safe_lcm(unsigned long long a, unsigned long long b) {
  const unsigned long long cap = 1ULL << 62;
  if (a >= cap || b >= cap) return cap;
  unsigned long long g = std::gcd(a, b);
  unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
  return l >= cap ? cap : static_cast<unsigned long long>(l);
}

bool point_less(const std::vector<FFElem>& a, const std::vector<FFElem>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return a[i] < b[i];
  }
  return false;
}

}  // namespace

unsigned long long KernelData::pi0_size() const { return pow_check(base_field.p(), pi0_dim); }

std::vector<std::vector<FFElem>> enumerate_points(const KernelData& k) {
  if (!k.materialized) throw Error("kernel points were not materialized");
  if (!k.points.empty()) return k.points;
  unsigned long long total = k.pi0_size();
  if (total > static_cast<unsigned long long>(limits().max_pi0_points))
    throw CeilingExceeded("component group too large to enumerate: p^" +
                          std::to_string(k.pi0_dim));
  long p = k.base_field.p();
  std::vector<std::vector<FFElem>> pts;
  pts.reserve(total);
  std::vector<long> digits(k.pi0_dim, 0);
  Field L = k.definition_field;
  std::vector<FFElem> zero_pt(k.ambient_dim, L.zero());
  for (unsigned long long idx = 0; idx < total; ++idx) {
    std::vector<FFElem> pt = zero_pt;
    unsigned long long v = idx;
    for (long b = 0; b < k.pi0_dim; ++b) {
      long dgt = static_cast<long>(v % p);
      v /= p;
      if (dgt == 0) continue;
      FFElem scale = L.from_int(dgt);
      for (long c = 0; c < k.ambient_dim; ++c) pt[c] = pt[c] + scale * k.fp_basis[b][c];
    }
    pts.push_back(std::move(pt));
  }
  std::sort(pts.begin(), pts.end(), point_less);
  return pts;
}

// ---------------------------------------------------------------------------

std::pair<SkewPoly, SkewPoly> skew_divmod_right(const SkewPoly& f, const SkewPoly& g) {
  if (g.is_zero()) throw Error("division by the zero skew polynomial");
  SkewPoly q(f.field()), r = f;
  long dg = g.max_exp();
  FFElem ginv = g.coeff(dg).inverse();
  while (!r.is_zero() && r.max_exp() >= dg) {
    long d = r.max_exp() - dg;
    // (c Phi^d)(b Phi^dg) has leading coefficient c * b^(p^d)
    FFElem c = r.coeff(r.max_exp()) * frobenius(ginv, d);
    SkewPoly t = SkewPoly::monomial(c, d);
    q = q + t;
    r = r - t * g;
  }
  return {q, r};
}

std::pair<SkewPoly, SkewPoly> skew_divmod_left(const SkewPoly& f, const SkewPoly& g) {
  if (g.is_zero()) throw Error("division by the zero skew polynomial");
  SkewPoly q(f.field()), r = f;
  long dg = g.max_exp();
  FFElem ginv = g.coeff(dg).inverse();
  while (!r.is_zero() && r.max_exp() >= dg) {
    long d = r.max_exp() - dg;
    // (b Phi^dg)(c Phi^d) has leading coefficient b * c^(p^dg)
    FFElem c = frobenius(r.coeff(r.max_exp()) * ginv, -dg);
    SkewPoly t = SkewPoly::monomial(c, d);
    q = q + t;
    r = r - g * t;
  }
  return {q, r};
}

SkewPoly gcrd(SkewPoly f, SkewPoly g) {
  while (!g.is_zero()) {
    SkewPoly r = skew_divmod_right(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.is_zero()) {
    FFElem inv = f.coeff(f.max_exp()).inverse();
    f = SkewPoly::constant(f.field(), inv) * f;
  }
  return f;
}

// ---------------------------------------------------------------------------

namespace {

// Frobenius order bookkeeping: the minimal s with the full kernel of f_sep
// defined over F_{q^s} is the multiplicative order of T in F_p[T]/(mu),
// where mu is the minimal polynomial of x -> x^q acting on the kernel.
// mu is detected as the first F_p-linear dependence among the right
// remainders of Phi^(n j) modulo f_sep.

std::vector<long> flatten_remainder(const SkewPoly& r, long span, long n) {
  std::vector<long> v(static_cast<size_t>(span) * n, 0);
  for (const auto& [k, c] : r.terms()) {
    const auto& cc = c.coeffs();
    for (long i = 0; i < n; ++i) v[static_cast<size_t>(k) * n + i] = cc[i];
  }
  return v;
}

ipoly::IPoly frobenius_min_poly(const SkewPoly& f_sep) {
  Field Fq = f_sep.field();
  long p = Fq.p(), n = Fq.n();
  long w = f_sep.max_exp();
  SkewPoly phin = SkewPoly::phi_power(Fq, n);
  std::vector<SkewPoly> rems;
  rems.push_back(skew_divmod_right(SkewPoly::phi_power(Fq, 0), f_sep).second);
  while (true) {
    SkewPoly next = skew_divmod_right(phin * rems.back(), f_sep).second;
    rems.push_back(next);
    long J = static_cast<long>(rems.size()) - 1;
    // dependence test over F_p on the flattened remainders
    FpMatrix M(p, w * n, J + 1);
    for (long j = 0; j <= J; ++j) {
      auto v = flatten_remainder(rems[j], w, n);
      for (long i = 0; i < w * n; ++i) M.at(i, j) = v[i];
    }
    auto ker = fp_kernel(M);
    if (!ker.empty()) {
      // first dependence involves the last column; normalize it monic
      for (const auto& kv : ker) {
        if (kv[J] == 0) continue;
        long inv = ipoly::mod_inv(kv[J], p);
        ipoly::IPoly mu(J + 1);
        for (long j = 0; j <= J; ++j) mu[j] = kv[j] * inv % p;
        return mu;
      }
      throw InternalInvariant("kernel dependence misses the last remainder");
    }
    if (J > w) throw InternalInvariant("Frobenius minimal polynomial exceeds the kernel dimension");
  }
}

unsigned long long order_mod_irreducible(const ipoly::IPoly& pi, long p) {
  long d = static_cast<long>(pi.size()) - 1;
  unsigned long long group = 1;
  for (long i = 0; i < d; ++i) group *= static_cast<unsigned long long>(p);
  group -= 1;  // |(F_p[T]/pi)^*| for irreducible pi
  // factor the group order, then peel primes off the exponent
  std::vector<unsigned long long> primes;
  unsigned long long g = group;
  for (unsigned long long q = 2; q * q <= g; ++q)
    if (g % q == 0) {
      primes.push_back(q);
      while (g % q == 0) g /= q;
    }
  if (g > 1) primes.push_back(g);
  unsigned long long ord = group;
  for (unsigned long long q : primes) {
    while (ord % q == 0) {
      ipoly::IPoly t = ipoly::powmod({0, 1}, ord / q, pi, p);
      if (t == ipoly::IPoly{1})
        ord /= q;
      else
        break;
    }
  }
  return ord;
}

unsigned long long order_of_frobenius(const ipoly::IPoly& mu, long p) {
  auto factors = ipoly::factor(mu, p);
  unsigned long long s = 1;
  for (const auto& [pi, e] : factors) {
    if (pi.size() == 2 && pi[0] == 0)
      throw InternalInvariant("Frobenius is singular on the kernel");
    unsigned long long o = order_mod_irreducible(pi, p);
    if (e > 1) {
      // lift: T^o = 1 mod pi; multiply by p until it holds mod pi^e
      ipoly::IPoly pie = {1};
      for (long i = 0; i < e; ++i) pie = ipoly::mul(pie, pi, p);
      while (!(ipoly::powmod({0, 1}, o, pie, p) == ipoly::IPoly{1})) {
        o *= static_cast<unsigned long long>(p);
      }
    }
    s = safe_lcm(s, o);
  }
  return s;
}

// dense F_p matrix of the additive map x -> f(x) on L; uses
// (t^j)^(p^e) = (t^(p^e))^j to fill columns incrementally
FpMatrix additive_map_matrix(const SkewPoly& f, const Field& L) {
  long p = L.p(), N = L.n();
  FpMatrix M(p, N, N);
  std::vector<FFElem> coeff_emb, bases, running;
  for (const auto& [k, c] : f.terms()) {
    coeff_emb.push_back(embed(c, L));
    bases.push_back(frobenius(L.gen(), k));
    running.push_back(L.one());
  }
  for (long j = 0; j < N; ++j) {
    FFElem col = L.zero();
    for (size_t t = 0; t < bases.size(); ++t) col = col + coeff_emb[t] * running[t];
    const auto& cc = col.coeffs();
    for (long i = 0; i < N; ++i) M.at(i, j) = cc[i];
    if (j + 1 < N)
      for (size_t t = 0; t < bases.size(); ++t) running[t] = running[t] * bases[t];
  }
  return M;
}

std::vector<std::vector<FFElem>> canonical_fp_basis(const std::vector<std::vector<FFElem>>& gens,
                                                    const Field& L, long ambient) {
  if (gens.empty()) return {};
  long p = L.p(), N = L.n();
  // RREF over F_p of the flattened generators
  FpMatrix M(p, static_cast<long>(gens.size()), ambient * N);
  for (size_t r = 0; r < gens.size(); ++r)
    for (long c = 0; c < ambient; ++c) {
      const auto& cc = gens[r][c].coeffs();
      for (long i = 0; i < N; ++i) M.at(static_cast<long>(r), c * N + i) = cc[i];
    }
  // row-reduce in place
  long rank = 0;
  for (long col = 0; col < M.cols && rank < M.rows; ++col) {
    long sel = -1;
    for (long i = rank; i < M.rows; ++i)
      if (M.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    for (long j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(rank, j));
    long inv = ipoly::mod_inv(M.at(rank, col), p);
    for (long j = 0; j < M.cols; ++j) M.at(rank, j) = M.at(rank, j) * inv % p;
    for (long i = 0; i < M.rows; ++i) {
      if (i == rank || M.at(i, col) == 0) continue;
      long f = M.at(i, col);
      for (long j = 0; j < M.cols; ++j)
        M.at(i, j) = ((M.at(i, j) - f * M.at(rank, j)) % p + p) % p;
    }
    ++rank;
  }
  if (rank != static_cast<long>(gens.size()))
    throw InternalInvariant("component representatives are not independent");
  std::vector<std::vector<FFElem>> basis;
  for (long r = 0; r < rank; ++r) {
    std::vector<FFElem> pt;
    for (long c = 0; c < ambient; ++c) {
      std::vector<long> cc(N);
      for (long i = 0; i < N; ++i) cc[i] = M.at(r, c * N + i);
      pt.push_back(L.from_coeffs(std::move(cc)));
    }
    basis.push_back(std::move(pt));
  }
  std::sort(basis.begin(), basis.end(), point_less);
  return basis;
}

void finalize_points(KernelData& k) {
  unsigned long long total = pow_check(k.base_field.p(), k.pi0_dim);
  if (total <= static_cast<unsigned long long>(limits().max_pi0_points))
    k.points = enumerate_points(k);
}

}  // namespace

KernelData etale_kernel(const SkewPoly& f, bool need_points) {
  Field Fq = f.field();
  KernelData k;
  k.ambient_dim = 1;
  k.base_field = Fq;
  if (f.is_zero()) {
    k.connected_dim = 1;
    k.pi0_dim = 0;
    k.definition_degree = 1;
    k.definition_field = Fq;
    k.materialized = true;
    k.points = {{Fq.zero()}};
    return k;
  }
  long m = f.min_exp(), M = f.max_exp(), w = M - m;
  k.connected_dim = 0;
  k.pi0_dim = w;
  if (w == 0) {
    // a unit monomial: Frobenius is bijective on points
    k.definition_degree = 1;
    k.definition_field = Fq;
    k.materialized = true;
    k.points = {{Fq.zero()}};
    return k;
  }
  SkewPoly f_sep = f.phi_shift_left(-m);  // exponents [0, w], nonzero constant term
  ipoly::IPoly mu = frobenius_min_poly(f_sep);
  unsigned long long s = order_of_frobenius(mu, Fq.p());
  k.definition_degree = s;
  if (!need_points) return k;

  if (s > static_cast<unsigned long long>(limits().max_ext_degree))
    throw DegreeCeilingExceeded("kernel points need extension degree " + std::to_string(s) +
                                " over the base field, above ceiling " +
                                std::to_string(limits().max_ext_degree));
  if (s > static_cast<unsigned long long>(limits().max_dense_dim) / Fq.n())
    throw DegreeCeilingExceeded("kernel point extraction needs F_p-dimension " +
                                std::to_string(s) + "*" + std::to_string(Fq.n()) +
                                ", above ceiling " + std::to_string(limits().max_dense_dim));
  Field L = Field::extension_of(Fq, static_cast<long>(s));
  FpMatrix M_map = additive_map_matrix(f_sep, L);
  auto ker = fp_kernel(M_map);
  if (static_cast<long>(ker.size()) != w)
    throw InternalInvariant("kernel dimension " + std::to_string(ker.size()) +
                            " does not match the exponent span " + std::to_string(w));
  std::vector<std::vector<FFElem>> gens;
  for (auto& v : ker) gens.push_back({L.from_coeffs(std::move(v))});
  k.definition_field = L;
  k.fp_basis = canonical_fp_basis(gens, L, 1);
  k.materialized = true;
  finalize_points(k);
  return k;
}

long kernel_dimension_over(const SkewPoly& f, unsigned long long s) {
  if (f.is_zero()) throw Error("kernel dimension of the zero map is not finite");
  Field Fq = f.field();
  long p = Fq.p(), n = Fq.n();
  long w = f.span();
  if (w == 0) return 0;
  SkewPoly f_sep = f.phi_shift_left(-f.min_exp());
  // the right-remainder module has F_p-basis t^j Phi^i, i < w, j < n;
  // multiplication by Phi on the left is F_p-linear on it
  long N = w * n;
  auto coords = [&](const SkewPoly& r) {
    std::vector<long> v(N, 0);
    for (const auto& [k, c] : r.terms())
      for (long j = 0; j < n; ++j) v[k * n + j] = c.coeffs()[j];
    return v;
  };
  FpMatrix T(p, N, N);
  for (long i = 0; i < w; ++i)
    for (long j = 0; j < n; ++j) {
      std::vector<long> cc(n, 0);
      cc[j] = 1;
      SkewPoly basis = SkewPoly::monomial(Fq.from_coeffs(cc), i);
      SkewPoly img = skew_divmod_right(SkewPoly::phi_power(Fq, 1) * basis, f_sep).second;
      auto v = coords(img);
      for (long r = 0; r < N; ++r) T.at(r, i * n + j) = v[r];
    }
  // T^(n s) applied to the coordinates of Phi^0
  unsigned long long e = static_cast<unsigned long long>(n) * s;
  std::vector<long> vec(N, 0);
  vec[0] = 1;
  FpMatrix base = T;
  auto matmul = [&](const FpMatrix& A, const FpMatrix& B) {
    FpMatrix C(p, N, N);
    for (long i = 0; i < N; ++i)
      for (long k = 0; k < N; ++k) {
        long a = A.at(i, k);
        if (a == 0) continue;
        for (long j = 0; j < N; ++j) C.at(i, j) = (C.at(i, j) + a * B.at(k, j)) % p;
      }
    return C;
  };
  auto matvec = [&](const FpMatrix& A, const std::vector<long>& x) {
    std::vector<long> y(N, 0);
    for (long i = 0; i < N; ++i) {
      long acc = 0;
      for (long j = 0; j < N; ++j) acc = (acc + A.at(i, j) * x[j]) % p;
      y[i] = acc;
    }
    return y;
  };
  while (e > 0) {
    if (e & 1ULL) vec = matvec(base, vec);
    base = matmul(base, base);
    e >>= 1;
  }
  // reconstruct the remainder of Phi^(ns), subtract 1, take the right gcd
  std::map<long, FFElem> terms;
  for (long i = 0; i < w; ++i) {
    std::vector<long> cc(vec.begin() + i * n, vec.begin() + (i + 1) * n);
    FFElem c = Fq.from_coeffs(std::move(cc));
    if (!c.is_zero()) terms.emplace(i, c);
  }
  SkewPoly rem(Fq, std::move(terms));
  SkewPoly shifted = rem - SkewPoly::constant(Fq, Fq.one());
  if (shifted.is_zero()) return w;  // f_sep divides Phi^(ns) - 1 outright
  return gcrd(f_sep, shifted).span();
}

// ---------------------------------------------------------------------------

namespace {

// lift all entries of a row to nonnegative exponents (a unit row operation)
void clear_row_exponents(SkewMatrix& F, long i) {
  long mn = 0;
  bool any = false;
  for (long j = 0; j < F.cols(); ++j) {
    if (F.at(i, j).is_zero()) continue;
    mn = any ? std::min(mn, F.at(i, j).min_exp()) : F.at(i, j).min_exp();
    any = true;
  }
  if (!any || mn >= 0) return;
  for (long j = 0; j < F.cols(); ++j)
    if (!F.at(i, j).is_zero()) F.at(i, j) = F.at(i, j).phi_shift_left(-mn);
}

}  // namespace

long ore_rank(const SkewMatrix& F_in) {
  SkewMatrix F = F_in;
  for (long i = 0; i < F.rows(); ++i) clear_row_exponents(F, i);
  long rank = 0;
  long pr = 0;
  for (long c = 0; c < F.cols() && pr < F.rows(); ++c) {
    while (true) {
      long best = -1;
      for (long i = pr; i < F.rows(); ++i) {
        if (F.at(i, c).is_zero()) continue;
        if (best < 0 || F.at(i, c).max_exp() < F.at(best, c).max_exp()) best = i;
      }
      if (best < 0) break;
      long others = 0;
      for (long i = pr; i < F.rows(); ++i)
        if (i != best && !F.at(i, c).is_zero()) ++others;
      if (others == 0) {
        if (best != pr)
          for (long j = 0; j < F.cols(); ++j) std::swap(F.at(best, j), F.at(pr, j));
        ++rank;
        ++pr;
        break;
      }
      for (long i = pr; i < F.rows(); ++i) {
        if (i == best || F.at(i, c).is_zero()) continue;
        SkewPoly q = skew_divmod_right(F.at(i, c), F.at(best, c)).first;
        for (long j = 0; j < F.cols(); ++j) F.at(i, j) = F.at(i, j) - q * F.at(best, j);
      }
    }
  }
  return rank;
}

OreDiagonalization ore_diagonalize(const SkewMatrix& F_in) {
  SkewMatrix F = F_in;
  long rows = F.rows(), cols = F.cols();
  for (long i = 0; i < rows; ++i) clear_row_exponents(F, i);
  SkewMatrix Q(F.field(), cols, cols);
  for (long i = 0; i < cols; ++i) Q.at(i, i) = SkewPoly::phi_power(F.field(), 0);

  auto swap_rows = [&](long a, long b) {
    if (a == b) return;
    for (long j = 0; j < cols; ++j) std::swap(F.at(a, j), F.at(b, j));
  };
  auto swap_cols = [&](long a, long b) {
    if (a == b) return;
    for (long i = 0; i < rows; ++i) std::swap(F.at(i, a), F.at(i, b));
    for (long i = 0; i < cols; ++i) std::swap(Q.at(i, a), Q.at(i, b));
  };

  long pos = 0;
  while (pos < std::min(rows, cols)) {
    // smallest-degree nonzero entry of the submatrix to the pivot slot
    long bi = -1, bj = -1;
    for (long i = pos; i < rows; ++i)
      for (long j = pos; j < cols; ++j) {
        if (F.at(i, j).is_zero()) continue;
        if (bi < 0 || F.at(i, j).max_exp() < F.at(bi, bj).max_exp()) {
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;
    swap_rows(bi, pos);
    swap_cols(bj, pos);

    bool settled = false;
    while (!settled) {
      settled = true;
      // clear the pivot column with right division
      bool col_done = false;
      while (!col_done) {
        col_done = true;
        for (long i = pos + 1; i < rows; ++i) {
          if (F.at(i, pos).is_zero()) continue;
          auto [q, r] = skew_divmod_right(F.at(i, pos), F.at(pos, pos));
          for (long j = 0; j < cols; ++j) F.at(i, j) = F.at(i, j) - q * F.at(pos, j);
          if (!r.is_zero()) {
            swap_rows(i, pos);
            col_done = false;
            break;
          }
        }
      }
      // clear the pivot row with left division
      for (long j = pos + 1; j < cols; ++j) {
        if (F.at(pos, j).is_zero()) continue;
        auto [q, r] = skew_divmod_left(F.at(pos, j), F.at(pos, pos));
        for (long i = 0; i < rows; ++i) F.at(i, j) = F.at(i, j) - F.at(i, pos) * q;
        for (long i = 0; i < cols; ++i) Q.at(i, j) = Q.at(i, j) - Q.at(i, pos) * q;
        if (!r.is_zero()) {
          swap_cols(j, pos);
          settled = false;
          break;
        }
      }
    }
    ++pos;
  }

  OreDiagonalization out;
  out.rank = pos;
  out.source_transform = std::move(Q);
  for (long i = 0; i < std::min(rows, cols); ++i) out.diag.push_back(F.at(i, i));
  return out;
}

KernelData kernel_matrix(const SkewMatrix& F, bool need_points) {
  Field Fq = F.field();
  long cols = F.cols();
  OreDiagonalization dec = ore_diagonalize(F);

  long echelon_rank = ore_rank(F);
  if (echelon_rank != dec.rank)
    throw InternalInvariant("echelon rank " + std::to_string(echelon_rank) +
                            " disagrees with the diagonal reduction rank " +
                            std::to_string(dec.rank));

  KernelData k;
  k.ambient_dim = cols;
  k.base_field = Fq;
  k.connected_dim = cols - dec.rank;

  // per-block component groups
  std::vector<KernelData> blocks;
  unsigned long long s_lcm = 1;
  long total_dim = 0;
  for (long i = 0; i < dec.rank; ++i) {
    KernelData bk = etale_kernel(dec.diag[i], need_points);
    total_dim += bk.pi0_dim;
    if (bk.pi0_dim > 0) s_lcm = safe_lcm(s_lcm, bk.definition_degree);
    blocks.push_back(std::move(bk));
  }
  k.pi0_dim = total_dim;
  k.definition_degree = total_dim == 0 ? 1 : s_lcm;
  if (!need_points) return k;

  if (k.definition_degree >
      static_cast<unsigned long long>(limits().max_dense_dim) / Fq.n())
    throw DegreeCeilingExceeded("kernel points need F_p-dimension " +
                                std::to_string(k.definition_degree * Fq.n()) +
                                ", above ceiling " + std::to_string(limits().max_dense_dim));
  Field L = k.definition_degree == 1 ? Fq
                                     : Field::extension_of(Fq, static_cast<long>(k.definition_degree));
  k.definition_field = L;
  k.materialized = true;

  if (total_dim == 0) {
    k.points = {std::vector<FFElem>(cols, L.zero())};
    return k;
  }

  // transport block representatives through the source transform
  std::vector<std::vector<FFElem>> gens;
  for (long i = 0; i < dec.rank; ++i) {
    for (const auto& bpt : blocks[i].fp_basis) {
      std::vector<FFElem> z(cols, L.zero());
      z[i] = embed(bpt[0], L);
      std::vector<FFElem> w(cols, L.zero());
      for (long r = 0; r < cols; ++r) {
        if (dec.source_transform.at(r, i).is_zero()) continue;
        w[r] = evaluate(dec.source_transform.at(r, i), z[i]);
      }
      // verify against the original map
      for (const auto& img : F.apply(w))
        if (!img.is_zero())
          throw InternalInvariant("transported representative is not a kernel point");
      gens.push_back(std::move(w));
    }
  }
  k.fp_basis = canonical_fp_basis(gens, L, cols);

  // direct dense cross-check of the stabilized point count, within ceilings:
  // dim_p ker(F)(F_{q^s}) = connected_dim * n * s + pi0_dim
  long N = L.n();
  if (N * cols <= limits().max_dense_dim) {
    FpMatrix big(Fq.p(), F.rows() * N, cols * N);
    for (long br = 0; br < F.rows(); ++br)
      for (long bc = 0; bc < cols; ++bc) {
        if (F.at(br, bc).is_zero()) continue;
        FpMatrix blk = additive_map_matrix(F.at(br, bc), L);
        for (long i = 0; i < N; ++i)
          for (long j = 0; j < N; ++j) big.at(br * N + i, bc * N + j) = blk.at(i, j);
      }
    auto ker = fp_kernel(big);
    long expect = k.connected_dim * N + k.pi0_dim;
    if (static_cast<long>(ker.size()) != expect)
      throw InternalInvariant("direct kernel dimension " + std::to_string(ker.size()) +
                              " does not match " + std::to_string(expect));
  }

  finalize_points(k);
  return k;
}

unsigned long long DimReport::pi0_size(long p) const { return pow_check(p, pi0_dim); }

DimReport dimension_report(const SkewMatrix& F) {
  KernelData kf = kernel_matrix(F, false);
  KernelData kfs = kernel_matrix(F.adjoint_transpose(), false);
  DimReport r;
  r.d1 = F.cols();
  r.d2 = F.rows();
  r.k1 = kf.connected_dim;
  r.k2 = kfs.connected_dim;
  if (r.d1 - r.k1 != r.d2 - r.k2)
    throw InternalInvariant("dimension identity d1-k1 = d2-k2 failed");
  r.d = r.d1 - r.k1;
  if (r.d1 + r.k2 != r.d2 + r.k1)
    throw InternalInvariant("dimension identity d1+k2 = d2+k1 failed");
  r.D = r.d1 + r.k2;
  if (kf.pi0_dim != kfs.pi0_dim)
    throw InternalInvariant("component groups of F and F* differ in size: p^" +
                            std::to_string(kf.pi0_dim) + " vs p^" + std::to_string(kfs.pi0_dim));
  r.pi0_dim = kf.pi0_dim;
  r.definition_degree_f = kf.definition_degree;
  r.definition_degree_fstar = kfs.definition_degree;
  r.support_degree = 2 * r.D;
  return r;
}

}  // namespace bimult
