#include "bimult/pairing.hpp"

#include <algorithm>
#include <numeric>

namespace bimult {

namespace {

bool point_less(const std::vector<FFElem>& a, const std::vector<FFElem>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return a[i] < b[i];
  }
  return false;
}

// all points of the component group embedded in L, sorted, each carrying its
// digit vector with respect to fp_basis (for the biadditive extension)
struct LabeledPoints {
  std::vector<std::vector<FFElem>> pts;
  std::vector<std::vector<long>> digits;
  std::vector<std::vector<FFElem>> basis;  // embedded in L
};

LabeledPoints embed_labels(const KernelData& k, const Field& L) {
  if (!k.materialized) throw Error("kernel representatives were not materialized");
  long p = k.base_field.p();
  LabeledPoints out;
  for (const auto& b : k.fp_basis) {
    std::vector<FFElem> eb;
    for (const auto& c : b) eb.push_back(embed(c, L));
    out.basis.push_back(std::move(eb));
  }
  unsigned long long total = k.pi0_size();
  if (total > static_cast<unsigned long long>(limits().max_pairing_cells))
    throw CeilingExceeded("component group too large for a pairing table");
  std::vector<std::pair<std::vector<FFElem>, std::vector<long>>> items;
  std::vector<FFElem> zero_pt(k.ambient_dim, L.zero());
  for (unsigned long long idx = 0; idx < total; ++idx) {
    std::vector<FFElem> pt = zero_pt;
    std::vector<long> dig(k.pi0_dim, 0);
    unsigned long long v = idx;
    for (long b = 0; b < k.pi0_dim; ++b) {
      long d = static_cast<long>(v % p);
      v /= p;
      dig[b] = d;
      if (d == 0) continue;
      FFElem scale = L.from_int(d);
      for (long c = 0; c < k.ambient_dim; ++c) pt[c] = pt[c] + scale * out.basis[b][c];
    }
    items.emplace_back(std::move(pt), std::move(dig));
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return point_less(a.first, b.first); });
  for (auto& [pt, dig] : items) {
    out.pts.push_back(std::move(pt));
    out.digits.push_back(std::move(dig));
  }
  return out;
}

}  // namespace

PairingTable pairing_table(const SkewMatrix& F) {
  KernelData k1 = kernel_matrix(F);
  KernelData k2 = kernel_matrix(F.adjoint_transpose());
  return pairing_table(F, k1, k2);
}

PairingTable pairing_table(const SkewMatrix& F, const KernelData& ker_f,
                           const KernelData& ker_fstar) {
  Field Fq = F.field();
  unsigned long long cells = ker_f.pi0_size() * ker_fstar.pi0_size();
  if (cells > static_cast<unsigned long long>(limits().max_pairing_cells))
    throw CeilingExceeded("pairing table would have " + std::to_string(cells) + " cells");

  unsigned long long sdeg = std::lcm(ker_f.definition_degree, ker_fstar.definition_degree);
  Field L;
  if (sdeg == ker_f.definition_degree)
    L = ker_f.definition_field;
  else if (sdeg == ker_fstar.definition_degree)
    L = ker_fstar.definition_field;
  else
    L = Field::extension_of(Fq, static_cast<long>(sdeg));

  PairingTable T;
  T.p = Fq.p();
  T.common_field = L;
  LabeledPoints left = embed_labels(ker_f, L);
  LabeledPoints right = embed_labels(ker_fstar, L);
  long p = T.p;

  // the g-form is additive in each argument monomial by monomial, so B is
  // determined exactly by its values on basis pairs
  long db1 = static_cast<long>(left.basis.size()), db2 = static_cast<long>(right.basis.size());
  std::vector<std::vector<long>> Bb(db1, std::vector<long>(db2, 0));
  for (long a = 0; a < db1; ++a)
    for (long b = 0; b < db2; ++b)
      Bb[a][b] = g_eval_matrix(F, left.basis[a], right.basis[b]).prime_residue();

  long rows = static_cast<long>(left.pts.size()), cols = static_cast<long>(right.pts.size());
  T.values.assign(rows, std::vector<long>(cols, 0));
  for (long i = 0; i < rows; ++i) {
    std::vector<long> row_form(db2, 0);
    for (long a = 0; a < db1; ++a) {
      if (left.digits[i][a] == 0) continue;
      for (long b = 0; b < db2; ++b)
        row_form[b] = (row_form[b] + left.digits[i][a] * Bb[a][b]) % p;
    }
    for (long j = 0; j < cols; ++j) {
      long acc = 0;
      for (long b = 0; b < db2; ++b) acc = (acc + row_form[b] * right.digits[j][b]) % p;
      T.values[i][j] = acc;
    }
  }
  T.left_labels = std::move(left.pts);
  T.right_labels = std::move(right.pts);

  // direct-evaluation crosscheck: every cell when small, a sample otherwise
  unsigned long long total_cells = static_cast<unsigned long long>(rows) * cols;
  if (total_cells <= 256) {
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j)
        if (T.values[i][j] !=
            g_eval_matrix(F, T.left_labels[i], T.right_labels[j]).prime_residue())
          throw InternalInvariant("biadditive extension disagrees with direct evaluation");
  } else {
    unsigned long long state = 0x9a1f2b3c0ull + total_cells;
    for (int it = 0; it < 48; ++it) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      long i = static_cast<long>((state >> 16) % rows);
      long j = static_cast<long>((state >> 40) % cols);
      if (T.values[i][j] !=
          g_eval_matrix(F, T.left_labels[i], T.right_labels[j]).prime_residue())
        throw InternalInvariant("biadditive extension disagrees with direct evaluation");
    }
  }
  return T;
}

NondegeneracyCertificate check_nondegenerate(const PairingTable& T) {
  NondegeneracyCertificate c;
  long rows = T.left_size(), cols = T.right_size();
  long p = T.p;

  c.left_ok = true;
  for (long i = 0; i < rows; ++i) {
    bool zero_row = true, zero_label = true;
    for (long j = 0; j < cols && zero_row; ++j) zero_row = (T.values[i][j] == 0);
    for (const auto& x : T.left_labels[i]) zero_label = zero_label && x.is_zero();
    if (zero_row && !zero_label) c.left_ok = false;
  }
  c.right_ok = true;
  for (long j = 0; j < cols; ++j) {
    bool zero_col = true, zero_label = true;
    for (long i = 0; i < rows && zero_col; ++i) zero_col = (T.values[i][j] == 0);
    for (const auto& x : T.right_labels[j]) zero_label = zero_label && x.is_zero();
    if (zero_col && !zero_label) c.right_ok = false;
  }

  // (psi B)(psi -B)^T: entry (i, i') is sum_j zeta^(B(i,j) - B(i',j)),
  // expanded exactly in Z[zeta] through residue counts; it must equal
  // |pi0(K2)| for i = i' and 0 otherwise
  c.character_ok = true;
  std::vector<long> counts(p);
  for (long i = 0; i < rows && c.character_ok; ++i)
    for (long i2 = 0; i2 < rows && c.character_ok; ++i2) {
      std::fill(counts.begin(), counts.end(), 0);
      for (long j = 0; j < cols; ++j)
        ++counts[((T.values[i][j] - T.values[i2][j]) % p + p) % p];
      if (i == i2) {
        if (counts[0] != cols) c.character_ok = false;
      } else {
        // a Z-combination of all p roots of unity vanishes iff the
        // coefficients are equal
        for (long r = 1; r < p; ++r)
          if (counts[r] != counts[0]) c.character_ok = false;
      }
    }

  bool elementwise = c.left_ok && c.right_ok;
  c.criteria_agree = (c.character_ok == c.left_ok);
  c.nondegenerate = elementwise && c.character_ok;
  return c;
}

SymmetryReport classify_symmetry(const SkewPoly& f) {
  SymmetryReport r;
  SkewPoly fs = adjoint(f);
  if (f == fs) {
    r.cls = SymmetryClass::symmetric;
    r.formal_skew_char2 = (f.field().p() == 2 && !f.is_zero());
  } else if (f == -fs) {
    r.cls = SymmetryClass::skew_symmetric;
  } else {
    r.cls = SymmetryClass::neither;
  }
  return r;
}

const char* symmetry_name(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::symmetric:
      return "symmetric";
    case SymmetryClass::skew_symmetric:
      return "skew_symmetric";
    default:
      return "neither";
  }
}

}  // namespace bimult
