#pragma once

#include <optional>
#include <string>

#include "bimult/heisenberg.hpp"

namespace bimult {

/// Formal label space of one cohomology basis, with its degree and twist
/// bookkeeping.  No cohomology is computed; the labels carry the content.
struct BasisSpace {
  RepModel side = RepModel::X;
  std::vector<std::vector<FFElem>> labels;  ///< pi0(K2) points (X) or pi0(K1) points (Y)
  long degree = 0;                          ///< 2D
  long twist = 0;                           ///< D
};

/// Scalars of the two change-of-basis relations.  For a single nonzero
/// polynomial with exponent range [m, M], the model with source rings scaled
/// by p^m and p^(-M) pins r = -m and r' = M; on diagonal matrices the
/// constants multiply over blocks (zero blocks contribute nothing).  The
/// scalars are model-dependent; p^(r+r') = |pi0| and the inversion identity
/// are not.
struct ConstantsReport {
  long d = 0;
  bool has_scalars = false;
  long r = 0, r_prime = 0;
  long pi0_dim = 0;  ///< r + r' must equal this
  std::string model_note;

  mpq_class scalar_forward(long p) const;   ///< (-1)^d p^(-r)
  mpq_class scalar_backward(long p) const;  ///< (-1)^d p^(-r')
};

/// Everything the fourier-side certificates consume, computed once.
struct FourierSetting {
  SkewMatrix F;
  DimReport dims;
  KernelData ker_f, ker_fstar;
  PairingTable table;
  ConstantsReport consts;
  long psi_exponent = 1;
};

FourierSetting analyze_setting(const SkewMatrix& F, long psi_exponent = 1);

/// Constants alone (no pairing table needed).
ConstantsReport constants(const SkewMatrix& F);

BasisSpace basis_space(const FourierSetting& s, RepModel side);

enum class CobDirection { Y_from_X, X_from_Y };

/// Y_from_X: M[b1][b2] = scalar_forward * psi(B(b1,b2)), expressing each
/// Y*-label in the X*-labels.  X_from_Y is the transposed relation with
/// psi(-B) and scalar_backward.  Unscaled mode drops the scalar and is
/// always available; scaled mode throws ModelDependentUnsupported when the
/// constants are not pinned for this input.
CycloMatrix change_of_basis(const FourierSetting& s, CobDirection dir, bool scaled = true);

struct InversionCertificate {
  bool unscaled_ok = false;  ///< (psi B)(psi -B)^T = |pi0(K2)| I
  bool scaled_available = false;
  bool scaled_ok = false;  ///< forward * backward = I
};

InversionCertificate verify_inversion(const FourierSetting& s);

struct IntertwinerCertificate {
  bool unscaled_ok = false;
  bool scaled_available = false;
  bool scaled_ok = false;
  bool exhaustive = false;
  unsigned long long elements_checked = 0;
};

/// The change-of-basis matrix must intertwine the X- and Y-model actions:
/// M rho_X(gamma) = rho_Y(gamma) M for every gamma.  Scalars cancel, so the
/// unscaled certificate is model-independent.
IntertwinerCertificate verify_intertwiner(const FourierSetting& s);

}  // namespace bimult
