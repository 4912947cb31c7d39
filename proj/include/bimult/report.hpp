#pragma once

#include <string>

#include "json.hpp"

#include "bimult/fourier.hpp"
#include "bimult/problem.hpp"

namespace bimult {

using Json = nlohmann::ordered_json;

struct AnalysisResult {
  Json json;
  /// false iff a certificate the theory mandates came back false (a bug,
  /// not a data condition); ceiling-skipped sections leave it true
  bool ok = true;
};

/// Runs the full pipeline: dimensions, kernels, pairing, symmetry,
/// constants, change-of-basis identities, Heisenberg group and both
/// Stone-von-Neumann models, and every certificate.  Sections that pass a
/// ceiling are recorded under "skipped" with the reason.
AnalysisResult analyze(const Problem& prob);

/// Identical reports modulo wall-clock noise: the comparison form.
Json strip_timings(Json j);

/// Heisenberg-only pipeline (the `rep check` command).  The full matrix
/// tables are large and only emitted on request.
AnalysisResult rep_check(const Problem& prob, bool include_matrices = false);

Json rep_json(const Rep& r, bool include_matrices);

/// Exhaustive-enumeration kernel oracle: scans F_{q^s} for s = 1..s_max and
/// returns the kernel at the first degree where the count reaches p^span.
/// Must agree with etale_kernel as a point set.
KernelData oracle_kernel(const SkewPoly& f, long s_max);

Json kernel_json(const KernelData& k);
Json pairing_json(const PairingTable& t);
Json cyclo_json(const CycloElem& z);
Json cyclo_matrix_json(const CycloMatrix& m);

/// Deterministic property battery over randomly generated problems
/// (the `selftest` command).  Returns true when every property holds.
bool selftest(std::ostream& out);

}  // namespace bimult
