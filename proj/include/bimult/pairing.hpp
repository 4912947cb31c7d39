#pragma once

#include <vector>

#include "bimult/kernel.hpp"

namespace bimult {

/// The biadditive pairing B on pi0(ker F) x pi0(ker F*), with values in Z/p.
/// B is computed by evaluating the g-form on kernel representatives; both
/// sides of the defining equation vanish there, so the value lies in the
/// prime subfield.
struct PairingTable {
  long p = 0;
  Field common_field;  ///< both label sets live here
  std::vector<std::vector<FFElem>> left_labels;   ///< ker F representatives, lex order
  std::vector<std::vector<FFElem>> right_labels;  ///< ker F* representatives, lex order
  std::vector<std::vector<long>> values;          ///< values[i][j] = B(left_i, right_j)

  long left_size() const { return static_cast<long>(left_labels.size()); }
  long right_size() const { return static_cast<long>(right_labels.size()); }
  long at(long i, long j) const { return values[i][j]; }
};

PairingTable pairing_table(const SkewMatrix& F);

/// Variant reusing already-computed kernels (must belong to F and its
/// adjoint transpose).
PairingTable pairing_table(const SkewMatrix& F, const KernelData& ker_f,
                           const KernelData& ker_fstar);

struct NondegeneracyCertificate {
  bool left_ok = false;       ///< every nonzero b1 pairs nontrivially
  bool right_ok = false;      ///< every nonzero b2 pairs nontrivially
  bool character_ok = false;  ///< (psi B)(psi -B)^T = |pi0(K2)| I, exactly
  bool criteria_agree = false;
  bool nondegenerate = false;
};

NondegeneracyCertificate check_nondegenerate(const PairingTable& T);

enum class SymmetryClass { symmetric, skew_symmetric, neither };

struct SymmetryReport {
  SymmetryClass cls = SymmetryClass::neither;
  /// p = 2: f = -f* holds formally whenever f = f*; the converse
  /// classification needs odd characteristic
  bool formal_skew_char2 = false;
};

SymmetryReport classify_symmetry(const SkewPoly& f);

const char* symmetry_name(SymmetryClass c);

}  // namespace bimult
