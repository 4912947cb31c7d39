#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bimult/skew.hpp"

namespace bimult {

/// The etale component group of a kernel: connected dimension plus an
/// explicit F_p-basis of component representatives living in a named
/// extension of the coefficient field.
struct KernelData {
  long ambient_dim = 0;
  long connected_dim = 0;
  long pi0_dim = 0;  ///< F_p-dimension of the component group
  Field base_field;
  unsigned long long definition_degree = 1;  ///< s: points live in F_{q^s}
  Field definition_field;                    ///< valid when materialized
  bool materialized = false;
  /// component representatives; an F_p-space of size p^pi0_dim under
  /// coordinatewise addition, every member killed by the defining map
  std::vector<std::vector<FFElem>> fp_basis;
  /// all p^pi0_dim representatives in lexicographic coordinate order, kept
  /// only below the point-listing ceiling
  std::vector<std::vector<FFElem>> points;

  unsigned long long pi0_size() const;  ///< p^pi0_dim; throws above 2^62
};

/// Full point group spanned by fp_basis, lexicographically sorted.
std::vector<std::vector<FFElem>> enumerate_points(const KernelData& k);

/// Right division f = q*g + r with deg r < deg g (degrees in Phi; inputs
/// with nonnegative exponents).
std::pair<SkewPoly, SkewPoly> skew_divmod_right(const SkewPoly& f, const SkewPoly& g);

/// Left division f = g*q + r.
std::pair<SkewPoly, SkewPoly> skew_divmod_left(const SkewPoly& f, const SkewPoly& g);

/// Monic right gcd; ker(gcrd(f,g)) = ker f intersect ker g.
SkewPoly gcrd(SkewPoly f, SkewPoly g);

/// Kernel of a single additive map.  For f != 0 with exponent range [m, M]
/// the component group has exactly p^(M-m) points; the definition field is
/// the first F_{q^s} containing all of them.  For f = 0 the kernel is the
/// whole line: connected dimension 1, trivial component group.
KernelData etale_kernel(const SkewPoly& f, bool need_points = true);

/// F_p-dimension of ker(f)(F_{q^s}) for a single nonzero f, as the degree of
/// gcrd(f_sep, Phi^(ns) - 1).  The Phi power is taken by binary powering of
/// the Frobenius operator on the right-remainder module, so s may be large.
/// Independent of the degree search in etale_kernel.
long kernel_dimension_over(const SkewPoly& f, unsigned long long s);

/// Rank over the skew fraction field, by row echelon with right division.
long ore_rank(const SkewMatrix& F);

/// Diagonal reduction P F Q = diag over the skew Laurent ring; only the
/// source transform Q is kept (ker F = Q ker diag).
struct OreDiagonalization {
  std::vector<SkewPoly> diag;  ///< min(rows, cols) entries, nonzero ones first
  SkewMatrix source_transform;
  long rank = 0;
};
OreDiagonalization ore_diagonalize(const SkewMatrix& F);

/// Kernel of the map x -> F(x): connected dimension cols - rank, component
/// representatives transported from the diagonal blocks through the source
/// transform.  Block-diagonal inputs yield the product of the block kernels.
KernelData kernel_matrix(const SkewMatrix& F, bool need_points = true);

struct DimReport {
  long d1 = 0, d2 = 0;  ///< source and target dimensions
  long k1 = 0, k2 = 0;  ///< connected kernel dimensions of F and F*
  long d = 0, D = 0;    ///< d = d1-k1 = d2-k2, D = d1+k2 = d2+k1
  long pi0_dim = 0;     ///< log_p |pi0|, equal on both sides
  unsigned long long definition_degree_f = 1, definition_degree_fstar = 1;
  long support_degree = 0;  ///< 2D; the single cohomological degree

  unsigned long long pi0_size(long p) const;
};

/// Computes both kernels and asserts the dimension identities
/// D = d1+k2 = d2+k1, d = d1-k1 = d2-k2 and |pi0(ker F)| = |pi0(ker F*)|.
DimReport dimension_report(const SkewMatrix& F);

}  // namespace bimult
