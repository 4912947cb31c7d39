#pragma once

#include <functional>
#include <memory>

#include "bimult/cyclo.hpp"
#include "bimult/pairing.hpp"

namespace bimult {

/// Element of the Heisenberg group: indices into the pi0(K1) and pi0(K2)
/// label lists plus a residue mod p.
struct GroupElem {
  long i = 0, j = 0, a = 0;
  bool operator==(const GroupElem& o) const { return i == o.i && j == o.j && a == o.a; }
};

/// Gamma = pi0(K1) x pi0(K2) x Z/p with
/// (b1, b2, a) * (b1', b2', a') = (b1+b1', b2+b2', a+a'+B(b1, b2')).
/// Immutable once built; group axioms are verified at construction.
class HeisenbergGroup {
 public:
  explicit HeisenbergGroup(PairingTable table);

  long p() const;
  const PairingTable& table() const;
  long k1_size() const;
  long k2_size() const;
  unsigned long long order() const;

  GroupElem identity() const { return {k1_zero(), k2_zero(), 0}; }
  GroupElem mul(const GroupElem& x, const GroupElem& y) const;
  GroupElem inv(const GroupElem& x) const;

  long k1_zero() const;
  long k2_zero() const;
  long k1_add(long a, long b) const;
  long k2_add(long a, long b) const;
  long k1_neg(long a) const;
  long k2_neg(long a) const;
  long pairing(long i, long j) const;  ///< B(left_i, right_j)

  GroupElem element_at(unsigned long long idx) const;  ///< deterministic enumeration
  bool is_central(const GroupElem& x) const;
  unsigned long long center_order() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// build_group per the operation contract: the label lists of the kernels
/// must match the table (LabelMismatch otherwise).
HeisenbergGroup build_group(const KernelData& K1, const KernelData& K2, const PairingTable& B);

/// Generalized permutation matrix over Q(zeta_p): e_b -> zeta^phase[b] * e_{perm[b]}.
/// Products and traces cost O(dim), which keeps exhaustive verification cheap.
struct MonomialMatrix {
  std::vector<long> perm;
  std::vector<long> phase;  // residues mod p

  long dim() const { return static_cast<long>(perm.size()); }
  static MonomialMatrix identity(long n);
  MonomialMatrix compose(const MonomialMatrix& rhs, long p) const;  ///< this * rhs
  bool operator==(const MonomialMatrix& o) const { return perm == o.perm && phase == o.phase; }
  CycloMatrix to_cyclo(long p) const;
  std::vector<long> trace_counts(long p) const;  ///< counts[r] = #{fixed b : phase r}
};

enum class RepModel { X, Y };

/// A representation of Gamma by monomial matrices.  svn_rep builds the two
/// Stone-von-Neumann models; the combinators below produce controls.
class Rep {
 public:
  Rep(HeisenbergGroup group, long dim, std::string model_name,
      std::function<MonomialMatrix(const GroupElem&)> at);

  const HeisenbergGroup& group() const { return group_; }
  long dim() const { return dim_; }
  const std::string& model_name() const { return model_name_; }
  MonomialMatrix at(const GroupElem& g) const { return at_(g); }
  CycloMatrix matrix(const GroupElem& g) const { return at_(g).to_cyclo(group_.p()); }

 private:
  HeisenbergGroup group_;
  long dim_;
  std::string model_name_;
  std::function<MonomialMatrix(const GroupElem&)> at_;
};

/// The Stone-von-Neumann representation with central character psi^u.
/// X model on the pi0(K2)-labeled basis:
///   rho(k1, k2, a) e_b = psi(u (a - B(k1, b))) e_{b - k2}
/// Y model on the pi0(K1)-labeled basis:
///   rho(k1, k2, a) e_c = psi(u (a + B(c, k2) - B(k1, k2))) e_{c - k1}
/// The phase placement is the one that satisfies rho(g)rho(h) = rho(g*h)
/// against the group cocycle; this is machine-verified at build time
/// (exhaustively up to the group-order ceiling, sampled above it).
Rep svn_rep(const HeisenbergGroup& G, RepModel model, long psi_exponent = 1);

Rep direct_sum(const Rep& a, const Rep& b);
Rep tensor(const Rep& a, const Rep& b);
Rep dual(const Rep& a);

struct IrreducibilityCertificate {
  CycloElem schur_sum;  ///< Sum_gamma tr rho(gamma) conj(tr rho(gamma)), exact
  unsigned long long group_order = 0;
  bool irreducible = false;  ///< schur_sum == |Gamma|
};

IrreducibilityCertificate verify_irreducible(const Rep& R);

/// Exact character arithmetic: the Schur integer Sum|tr|^2 / |Gamma| plus
/// the multiplicity multiset in the two regimes where it is determined
/// (isotypic generic central character; trivial central character with
/// multiplicity-free Schur count).
struct DecompositionReport {
  unsigned long long schur_integer = 0;  ///< Sum |tr|^2 / |Gamma|
  long dim = 0;
  long regular_inner = 0;  ///< <chi, chi_reg> = dim(R)
  std::vector<long> multiplicities;
  bool inferred = false;
};

DecompositionReport brute_force_decompose(const Rep& R);

}  // namespace bimult
