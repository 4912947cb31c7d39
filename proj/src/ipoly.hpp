#pragma once

// Internal dense-polynomial helpers over F_p (constant term first).
// Not part of the public headers.

#include <vector>

namespace bimult::ipoly {

using IPoly = std::vector<long>;

long mod_inv(long a, long p);

void trim(IPoly& f);
IPoly mul(const IPoly& f, const IPoly& g, long p);
IPoly mod(IPoly f, const IPoly& m, long p);
IPoly gcd(IPoly a, IPoly b, long p);

/// x^(p^e) mod m
IPoly frob_power_of_x(long e, const IPoly& m, long p);

/// f^e mod m
IPoly powmod(const IPoly& f, unsigned long long e, const IPoly& m, long p);

bool is_irreducible(const IPoly& f, long p);

/// lexicographically smallest (counting order) monic irreducible of degree n
IPoly smallest_irreducible(long p, long n);

/// monic irreducible factors with multiplicities, deterministic order
std::vector<std::pair<IPoly, long>> factor(IPoly f, long p);

}  // namespace bimult::ipoly
