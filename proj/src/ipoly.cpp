#include "ipoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "bimult/errors.hpp"
#include "bimult/ff.hpp"

namespace bimult::ipoly {

long mod_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return ((t % p) + p) % p;
}

void trim(IPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

IPoly mul(const IPoly& f, const IPoly& g, long p) {
  if (f.empty() || g.empty()) return {};
  IPoly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  }
  trim(h);
  return h;
}

IPoly mod(IPoly f, const IPoly& m, long p) {
  trim(f);
  long inv_lead = mod_inv(m.back(), p);
  while (f.size() >= m.size()) {
    long c = f.back() * inv_lead % p;
    size_t off = f.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) f[off + i] = ((f[off + i] - c * m[i]) % p + p) % p;
    trim(f);
  }
  return f;
}

IPoly gcd(IPoly a, IPoly b, long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    IPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long inv = mod_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

IPoly powmod(const IPoly& f, unsigned long long e, const IPoly& m, long p) {
  IPoly acc = {1};
  IPoly base = mod(f, m, p);
  while (e > 0) {
    if (e & 1ULL) acc = mod(mul(acc, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
    e >>= 1;
  }
  return acc;
}

IPoly frob_power_of_x(long e, const IPoly& m, long p) {
  IPoly r = mod({0, 1}, m, p);
  for (long step = 0; step < e; ++step) r = powmod(r, static_cast<unsigned long long>(p), m, p);
  return r;
}

bool is_irreducible(const IPoly& f, long p) {
  long n = static_cast<long>(f.size()) - 1;
  if (n <= 0) return false;
  if (n == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  // f of degree n is reducible iff it has an irreducible factor of degree
  // d <= n/2, iff gcd(x^(p^d) - x, f) != 1 for some such d.  The Frobenius
  // chain is incremental and random candidates exit at small d.
  IPoly r = mod({0, 1}, f, p);
  for (long d = 1; 2 * d <= n; ++d) {
    r = powmod(r, static_cast<unsigned long long>(p), f, p);
    IPoly diff = r;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    trim(diff);
    if (gcd(diff, f, p).size() != 1) return false;
  }
  return true;
}

IPoly smallest_irreducible(long p, long n) {
  static std::map<std::pair<long, long>, IPoly> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, n});
    if (it != cache.end()) return it->second;
  }
  IPoly f(n + 1, 0);
  f[n] = 1;
  std::vector<long> c(n, 0);
  while (true) {
    for (long i = 0; i < n; ++i) f[i] = c[i];
    if ((n == 1 || f[0] != 0) && is_irreducible(f, p)) {
      std::lock_guard<std::mutex> lock(mu);
      cache.emplace(std::make_pair(p, n), f);
      return f;
    }
    long i = 0;
    while (i < n && ++c[i] == p) c[i++] = 0;
    if (i == n) throw InternalInvariant("no irreducible polynomial found (unreachable)");
  }
}

namespace {

// a = q*b + r over F_p
void divmod(IPoly a, const IPoly& b, long p, IPoly& q, IPoly& r) {
  trim(a);
  long inv_lead = mod_inv(b.back(), p);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    long c = a.back() * inv_lead % p;
    size_t off = a.size() - b.size();
    q[off] = c;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] = ((a[off + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

}  // namespace

std::vector<std::pair<IPoly, long>> factor(IPoly f, long p) {
  trim(f);
  if (f.size() <= 1) throw Error("cannot factor a constant");
  long inv = mod_inv(f.back(), p);
  for (auto& c : f) c = c * inv % p;

  // small degrees only: trial division in counting order.  Dividing out all
  // lower-degree factors first makes every divisor found here irreducible.
  std::vector<std::pair<IPoly, long>> out;
  long deg = static_cast<long>(f.size()) - 1;
  for (long d = 1; d <= deg / 2 && static_cast<long>(f.size()) - 1 >= 2 * d; ++d) {
    IPoly cand(d + 1, 0);
    cand[d] = 1;
    std::vector<long> cc(d, 0);
    bool more = true;
    while (more) {
      for (long i = 0; i < d; ++i) cand[i] = cc[i];
      long mult = 0;
      while (static_cast<long>(f.size()) > d) {
        IPoly q, r;
        divmod(f, cand, p, q, r);
        if (!r.empty()) break;
        f = q;
        ++mult;
      }
      if (mult > 0) out.emplace_back(cand, mult);
      long i = 0;
      while (i < d && ++cc[i] == p) cc[i++] = 0;
      more = (i < d);
      if (static_cast<long>(f.size()) - 1 < 2 * d) break;
    }
  }
  if (f.size() > 1) out.emplace_back(f, 1);  // what remains is irreducible
  return out;
}

}  // namespace bimult::ipoly
