#include "bimult/report.hpp"

#include <chrono>
#include <ostream>
#include <random>
#include <set>

namespace bimult {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Json point_json(const std::vector<FFElem>& pt) {
  Json a = Json::array();
  for (const auto& c : pt) a.push_back(c.coeffs());
  return a;
}

}  // namespace

Json kernel_json(const KernelData& k) {
  Json j;
  j["ambient_dim"] = k.ambient_dim;
  j["connected_dim"] = k.connected_dim;
  j["pi0_dim"] = k.pi0_dim;
  j["definition_degree"] = k.definition_degree;
  if (k.materialized) {
    j["field"] = k.definition_field.spec_text();
    Json basis = Json::array();
    for (const auto& pt : k.fp_basis) basis.push_back(point_json(pt));
    j["fp_basis"] = basis;
    Json pts = Json::array();
    for (const auto& pt : k.points) pts.push_back(point_json(pt));
    j["points"] = pts;
    j["points_listed"] = !k.points.empty() || k.pi0_dim == 0;
  } else {
    j["field"] = nullptr;
    j["points_listed"] = false;
  }
  return j;
}

Json pairing_json(const PairingTable& t) {
  Json j;
  j["p"] = t.p;
  j["field"] = t.common_field.spec_text();
  j["rows"] = t.left_size();
  j["cols"] = t.right_size();
  if (static_cast<unsigned long long>(t.left_size()) * t.right_size() > 16384) {
    j["omitted"] = "table too large for the report; certificates still computed";
    return j;
  }
  Json left = Json::array(), right = Json::array();
  for (const auto& pt : t.left_labels) left.push_back(point_json(pt));
  for (const auto& pt : t.right_labels) right.push_back(point_json(pt));
  j["left_labels"] = left;
  j["right_labels"] = right;
  j["values"] = t.values;
  return j;
}

Json cyclo_json(const CycloElem& z) {
  Json j;
  j["p"] = z.p();
  Json c = Json::array();
  for (const auto& q : z.coeffs()) c.push_back(q.get_str());
  j["coeffs"] = c;
  return j;
}

Json cyclo_matrix_json(const CycloMatrix& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) {
      Json entry = Json::array();
      for (const auto& q : m.at(i, j).coeffs()) entry.push_back(q.get_str());
      row.push_back(entry);
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

Json dims_json(const DimReport& d, long p) {
  Json j;
  j["d1"] = d.d1;
  j["d2"] = d.d2;
  j["k1"] = d.k1;
  j["k2"] = d.k2;
  j["d"] = d.d;
  j["D"] = d.D;
  j["support_degree"] = d.support_degree;
  j["pi0_dim"] = d.pi0_dim;
  if (d.pi0_dim < 40) j["pi0_size"] = d.pi0_size(p);
  return j;
}

Json constants_json(const ConstantsReport& c, long p) {
  Json j;
  j["supported"] = c.has_scalars;
  j["d"] = c.d;
  j["pi0_dim"] = c.pi0_dim;
  if (c.has_scalars) {
    j["r"] = c.r;
    j["r_prime"] = c.r_prime;
    j["scalar_forward"] = c.scalar_forward(p).get_str();
    j["scalar_backward"] = c.scalar_backward(p).get_str();
  }
  j["model_note"] = c.model_note;
  return j;
}

struct CertSet {
  Json j = Json::object();
  bool ok = true;
  void put(const std::string& name, bool value, bool required = true) {
    j[name] = value;
    if (required && !value) ok = false;
  }
};

}  // namespace

AnalysisResult analyze(const Problem& prob) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisResult res;
  Json& j = res.json;
  j["schema"] = 1;
  j["problem"] = print_problem(prob);
  j["options"] = {{"psi_exponent", prob.psi_exponent},
                  {"max_ext_degree", limits().max_ext_degree}};
  Json skipped = Json::array();
  CertSet certs;
  long p = prob.field.p();
  const SkewMatrix& F = prob.matrix;

  Json timings = Json::object();
  DimReport dims = dimension_report(F);
  j["dimensions"] = dims_json(dims, p);
  timings["dimensions_ms"] = ms_since(t0);

  // symmetry classification applies to the square 1x1 setting
  if (F.rows() == 1 && F.cols() == 1) {
    SymmetryReport sym = classify_symmetry(F.at(0, 0));
    Json js;
    js["class"] = symmetry_name(sym.cls);
    js["formal_skew_char2"] = sym.formal_skew_char2;
    if (sym.cls != SymmetryClass::neither) {
      // |pi0| must be an even power of p for (skew-)symmetric inputs
      certs.put("symmetric_even_power", dims.pi0_dim % 2 == 0);
    }
    j["symmetry"] = js;
  }

  ConstantsReport consts = constants(F);
  j["constants"] = constants_json(consts, p);
  if (consts.has_scalars) certs.put("constants_product_rule", consts.r + consts.r_prime == dims.pi0_dim);

  bool points_ok = true;
  try {
    auto tsetting = std::chrono::steady_clock::now();
    FourierSetting setting = analyze_setting(F, prob.psi_exponent);
    timings["setting_ms"] = ms_since(tsetting);
    j["kernel_f"] = kernel_json(setting.ker_f);
    j["kernel_fstar"] = kernel_json(setting.ker_fstar);
    j["pairing"] = pairing_json(setting.table);

    NondegeneracyCertificate nd = check_nondegenerate(setting.table);
    certs.put("nondegenerate", nd.nondegenerate);
    certs.put("nondegeneracy_criteria_agree", nd.criteria_agree);

    InversionCertificate inv = verify_inversion(setting);
    certs.put("inversion_unscaled", inv.unscaled_ok);
    if (inv.scaled_available) certs.put("inversion_scaled", inv.scaled_ok);

    if (consts.has_scalars && dims.pi0_dim % 2 == 0 && F.rows() == 1 && F.cols() == 1) {
      SymmetryReport sym = classify_symmetry(F.at(0, 0));
      if (sym.cls != SymmetryClass::neither) certs.put("symmetric_r_equals_rprime", consts.r == consts.r_prime);
    }

    if (setting.table.left_size() <= 64) {
      Json mats;
      if (consts.has_scalars) {
        mats["forward"] = cyclo_matrix_json(change_of_basis(setting, CobDirection::Y_from_X, true));
        mats["backward"] = cyclo_matrix_json(change_of_basis(setting, CobDirection::X_from_Y, true));
      } else {
        mats["forward_unscaled"] =
            cyclo_matrix_json(change_of_basis(setting, CobDirection::Y_from_X, false));
        mats["backward_unscaled"] =
            cyclo_matrix_json(change_of_basis(setting, CobDirection::X_from_Y, false));
      }
      j["matrices"] = mats;
    } else {
      skipped.push_back("matrices: table larger than the report ceiling");
    }

    unsigned long long gamma_order = setting.ker_f.pi0_size() * setting.ker_fstar.pi0_size() * p;
    if (gamma_order <= static_cast<unsigned long long>(limits().max_group_order)) {
      auto theis = std::chrono::steady_clock::now();
      HeisenbergGroup G = build_group(setting.ker_f, setting.ker_fstar, setting.table);
      Json hj;
      hj["order"] = G.order();
      hj["center_order"] = G.center_order();
      certs.put("center_is_A", G.center_order() == static_cast<unsigned long long>(p));
      j["heisenberg"] = hj;

      Rep rx = svn_rep(G, RepModel::X, prob.psi_exponent);
      Rep ry = svn_rep(G, RepModel::Y, prob.psi_exponent);
      Json rj;
      rj["dim_x"] = rx.dim();
      rj["dim_y"] = ry.dim();
      certs.put("model_dims_equal", rx.dim() == ry.dim());
      IrreducibilityCertificate ix = verify_irreducible(rx);
      IrreducibilityCertificate iy = verify_irreducible(ry);
      rj["schur_sum_x"] = cyclo_json(ix.schur_sum);
      rj["schur_sum_y"] = cyclo_json(iy.schur_sum);
      certs.put("irreducible_x", ix.irreducible);
      certs.put("irreducible_y", iy.irreducible);
      j["representations"] = rj;

      IntertwinerCertificate itw = verify_intertwiner(setting);
      certs.put("intertwiner_unscaled", itw.unscaled_ok);
      if (itw.scaled_available) certs.put("intertwiner_scaled", itw.scaled_ok);
      timings["heisenberg_ms"] = ms_since(theis);
    } else {
      skipped.push_back("heisenberg: group order " + std::to_string(gamma_order) +
                        " above ceiling " + std::to_string(limits().max_group_order));
    }
  } catch (const DegreeCeilingExceeded& e) {
    points_ok = false;
    skipped.push_back(std::string("kernel points: ") + e.what());
  } catch (const CeilingExceeded& e) {
    points_ok = false;
    skipped.push_back(std::string("ceiling: ") + e.what());
  }
  if (!points_ok) {
    // sizes are still exact without materialized points
    j["kernel_f"] = kernel_json(kernel_matrix(F, false));
    j["kernel_fstar"] = kernel_json(kernel_matrix(F.adjoint_transpose(), false));
  }

  j["certificates"] = certs.j;
  j["skipped"] = skipped;
  j["ok"] = certs.ok;
  timings["total_ms"] = ms_since(t0);
  j["timings"] = timings;
  res.ok = certs.ok;
  return res;
}

Json strip_timings(Json j) {
  j.erase("timings");
  return j;
}

Json rep_json(const Rep& r, bool include_matrices) {
  Json j;
  j["model"] = r.model_name();
  j["dim"] = r.dim();
  if (include_matrices) {
    const HeisenbergGroup& G = r.group();
    Json mats = Json::array();
    for (unsigned long long t = 0; t < G.order(); ++t) {
      GroupElem g = G.element_at(t);
      Json entry;
      entry["element"] = {g.i, g.j, g.a};
      entry["matrix"] = cyclo_matrix_json(r.matrix(g));
      mats.push_back(entry);
    }
    j["matrices"] = mats;
  }
  return j;
}

AnalysisResult rep_check(const Problem& prob, bool include_matrices) {
  AnalysisResult res;
  Json& j = res.json;
  j["schema"] = 1;
  j["problem"] = print_problem(prob);
  CertSet certs;
  long p = prob.field.p();
  FourierSetting setting = analyze_setting(prob.matrix, prob.psi_exponent);
  unsigned long long gamma_order = setting.ker_f.pi0_size() * setting.ker_fstar.pi0_size() * p;
  if (gamma_order > static_cast<unsigned long long>(limits().max_group_order))
    throw CeilingExceeded("group order " + std::to_string(gamma_order) + " above ceiling");
  HeisenbergGroup G = build_group(setting.ker_f, setting.ker_fstar, setting.table);
  j["order"] = G.order();
  j["center_order"] = G.center_order();
  Rep rx = svn_rep(G, RepModel::X, prob.psi_exponent);
  Rep ry = svn_rep(G, RepModel::Y, prob.psi_exponent);
  j["rep_x"] = rep_json(rx, include_matrices);
  j["rep_y"] = rep_json(ry, include_matrices);
  j["dim_x"] = rx.dim();
  j["dim_y"] = ry.dim();
  IrreducibilityCertificate ix = verify_irreducible(rx);
  IrreducibilityCertificate iy = verify_irreducible(ry);
  certs.put("irreducible_x", ix.irreducible);
  certs.put("irreducible_y", iy.irreducible);
  DecompositionReport dx = brute_force_decompose(rx);
  Json dj;
  dj["schur_integer"] = dx.schur_integer;
  dj["dim"] = dx.dim;
  dj["multiplicities"] = dx.multiplicities;
  dj["inferred"] = dx.inferred;
  j["decomposition_x"] = dj;
  certs.put("svn_multiplicity_one", dx.inferred && dx.multiplicities == std::vector<long>{1});
  IntertwinerCertificate itw = verify_intertwiner(setting);
  certs.put("intertwiner_unscaled", itw.unscaled_ok);
  j["certificates"] = certs.j;
  j["ok"] = certs.ok;
  res.ok = certs.ok;
  return res;
}

KernelData oracle_kernel(const SkewPoly& f, long s_max) {
  Field Fq = f.field();
  if (f.is_zero()) return etale_kernel(f);
  long w = f.span();
  unsigned long long target = 1;
  for (long i = 0; i < w; ++i) target *= static_cast<unsigned long long>(Fq.p());
  for (long s = 1; s <= s_max; ++s) {
    if (Fq.size_log2() * s > limits().max_enum_log2)
      throw CeilingExceeded("enumeration of F_{q^" + std::to_string(s) + "} passes the 2^" +
                            std::to_string(static_cast<long>(limits().max_enum_log2)) +
                            " ceiling");
    Field L = s == 1 ? Fq : Field::extension_of(Fq, s);
    std::vector<std::vector<FFElem>> roots;
    for (unsigned long long idx = 0; idx < L.size(); ++idx) {
      FFElem x = L.element_at(idx);
      if (evaluate(f, x).is_zero()) roots.push_back({x});
    }
    if (roots.size() == target) {
      KernelData k;
      k.ambient_dim = 1;
      k.connected_dim = 0;
      k.pi0_dim = w;
      k.base_field = Fq;
      k.definition_degree = s;
      k.definition_field = L;
      k.materialized = true;
      std::sort(roots.begin(), roots.end(),
                [](const std::vector<FFElem>& a, const std::vector<FFElem>& b) {
                  return a[0] < b[0];
                });
      k.points = roots;
      // a basis: greedily extend an independent set (every point is an
      // F_p-combination, so span size tracks independence)
      std::vector<std::vector<FFElem>> basis;
      std::set<std::vector<long>> span = {L.zero().coeffs()};
      std::vector<FFElem> span_elems = {L.zero()};
      for (const auto& r : roots) {
        if (span.count(r[0].coeffs())) continue;
        std::vector<FFElem> grown;
        for (const auto& x : span_elems)
          for (long c = 1; c < Fq.p(); ++c) {
            FFElem y = x + r[0] * L.from_int(c);
            if (span.insert(y.coeffs()).second) grown.push_back(y);
          }
        span_elems.insert(span_elems.end(), grown.begin(), grown.end());
        basis.push_back(r);
      }
      k.fp_basis = basis;
      return k;
    }
  }
  throw CeilingExceeded("kernel not fully rational within s_max = " + std::to_string(s_max));
}

bool selftest(std::ostream& out) {
  std::mt19937_64 rng(0x5e1f7e57);
  bool ok = true;
  auto report = [&](const std::string& name, bool pass) {
    out << (pass ? "PASS " : "FAIL ") << name << "\n";
    ok = ok && pass;
  };

  // adjoint and g-form identities over random polynomials
  for (long p : {2L, 3L, 5L}) {
    Field Fp = Field::create(p, 1);
    Field L = Field::extension_of(Fp, 4);
    bool adj_ok = true, g_ok = true;
    for (int it = 0; it < 30; ++it) {
      std::map<long, FFElem> tf, tg;
      for (long k = -2; k <= 2; ++k) {
        if (rng() % 2) tf.emplace(k, Fp.from_int(static_cast<long>(rng() % p)));
        if (rng() % 2) tg.emplace(k, Fp.from_int(static_cast<long>(rng() % p)));
      }
      SkewPoly f(Fp, tf), g(Fp, tg);
      adj_ok = adj_ok && adjoint(adjoint(f)) == f &&
               adjoint(f * g) == adjoint(g) * adjoint(f);
      FFElem x = L.element_at(rng() % L.size()), y = L.element_at(rng() % L.size());
      FFElem gv = g_form(f).eval(x, y);
      g_ok = g_ok &&
             frobenius(gv, 1) - gv == evaluate(f, x) * y - x * evaluate(adjoint(f), y);
    }
    report("adjoint algebra p=" + std::to_string(p), adj_ok);
    report("g-form equation p=" + std::to_string(p), g_ok);
  }

  // kernel sizes and the full pipeline on the pinned worked instance
  {
    Problem prob = parse_problem("p=3 n=1 | [F - 1]");
    AnalysisResult r = analyze(prob);
    report("pipeline on F - 1 over F_3", r.ok);
    bool parse_ok = true;
    for (int it = 0; it < 200; ++it) {
      Problem q = prob;  // reuse field
      long rows = 1 + static_cast<long>(rng() % 2), cols = 1 + static_cast<long>(rng() % 2);
      SkewMatrix M(prob.field, rows, cols);
      for (long a = 0; a < rows; ++a)
        for (long b = 0; b < cols; ++b) {
          std::map<long, FFElem> t;
          for (long k = -2; k <= 2; ++k)
            if (rng() % 3 == 0) t.emplace(k, prob.field.from_int(static_cast<long>(rng() % 3)));
          M.at(a, b) = SkewPoly(prob.field, t);
        }
      q.matrix = M;
      parse_ok = parse_ok && parse_problem(print_problem(q)) == q;
    }
    report("parse/print round trip", parse_ok);
  }
  return ok;
}

}  // namespace bimult
