// Command-line front end: analyze problems, run the enumeration oracle,
// check the Heisenberg representations, or run the property selftest.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bimult/report.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw bimult::Error("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void print_human_summary(const bimult::Json& j, std::ostream& out) {
  out << "problem: " << j["problem"].get<std::string>() << "\n";
  const auto& d = j["dimensions"];
  out << "dimensions: d1=" << d["d1"] << " d2=" << d["d2"] << " k1=" << d["k1"]
      << " k2=" << d["k2"] << " d=" << d["d"] << " D=" << d["D"]
      << " support degree " << d["support_degree"] << "\n";
  out << "pi0 dimension: " << d["pi0_dim"] << "\n";
  if (j.contains("symmetry"))
    out << "symmetry: " << j["symmetry"]["class"].get<std::string>() << "\n";
  const auto& c = j["constants"];
  if (c["supported"].get<bool>())
    out << "constants: r=" << c["r"] << " r'=" << c["r_prime"]
        << " forward scalar " << c["scalar_forward"].get<std::string>()
        << " backward scalar " << c["scalar_backward"].get<std::string>() << "\n";
  else
    out << "constants: model-dependent (unscaled identities only)\n";
  if (j.contains("pairing")) {
    const auto& pj = j["pairing"];
    out << "pairing table (" << pj["rows"] << " x " << pj["cols"] << "):\n";
    if (pj.contains("values")) {
      for (const auto& row : pj["values"]) {
        out << "  ";
        for (const auto& v : row) out << v << " ";
        out << "\n";
      }
    } else {
      out << "  (omitted: too large for the report)\n";
    }
  }
  out << "certificates:\n";
  for (const auto& [name, val] : j["certificates"].items())
    out << "  " << name << ": " << (val.get<bool>() ? "true" : "FALSE") << "\n";
  for (const auto& s : j["skipped"]) out << "skipped: " << s.get<std::string>() << "\n";
  out << (j["ok"].get<bool>() ? "OK" : "CERTIFICATE FAILURE (bug)") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pairings, Heisenberg representations and finite Fourier "
               "matrices for additive-group kernels"};
  app.require_subcommand(1);

  std::string input, json_out;
  long psi_exponent = 1;
  long max_ext_degree = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "problem file, or - for stdin")->required();
    cmd->add_option("--psi-exponent", psi_exponent,
                    "replace psi by psi^u (u a unit mod p)");
    cmd->add_option("--max-ext-degree", max_ext_degree,
                    "ceiling on the extension-degree search");
  };

  auto* cmd_analyze = app.add_subcommand("analyze", "run the full pipeline");
  add_common(cmd_analyze);
  cmd_analyze->add_option("--json", json_out, "write the full JSON report to a file");

  auto* cmd_oracle = app.add_subcommand("oracle", "brute-force oracles");
  cmd_oracle->require_subcommand(1);
  auto* cmd_oracle_kernel =
      cmd_oracle->add_subcommand("kernel", "kernel points by exhaustive enumeration");
  long s_max = 8;
  cmd_oracle_kernel->add_option("input", input, "problem file, or - for stdin")->required();
  cmd_oracle_kernel->add_option("--s-max", s_max, "largest extension degree to enumerate");

  auto* cmd_rep = app.add_subcommand("rep", "Heisenberg representation pipeline");
  auto* cmd_rep_check = cmd_rep->add_subcommand("check", "build and certify both models");
  add_common(cmd_rep_check);
  bool rep_matrices = false;
  cmd_rep_check->add_flag("--matrices", rep_matrices,
                          "include the full matrix tables (large)");

  auto* cmd_selftest = app.add_subcommand("selftest", "run the property battery");

  CLI11_PARSE(app, argc, argv);

  try {
    if (max_ext_degree > 0) bimult::limits().max_ext_degree = max_ext_degree;

    if (cmd_selftest->parsed()) {
      return bimult::selftest(std::cout) ? 0 : 1;
    }

    if (cmd_oracle_kernel->parsed()) {
      bimult::Problem prob = bimult::parse_problem(read_input(input));
      if (prob.matrix.rows() != 1 || prob.matrix.cols() != 1)
        throw bimult::Error("the kernel oracle takes a single polynomial");
      bimult::KernelData k = bimult::oracle_kernel(prob.matrix.at(0, 0), s_max);
      std::cout << bimult::kernel_json(k).dump(2) << "\n";
      return 0;
    }

    bimult::Problem prob = bimult::parse_problem(read_input(input));
    prob.psi_exponent = psi_exponent;

    if (cmd_rep_check->parsed()) {
      bimult::AnalysisResult r = bimult::rep_check(prob, rep_matrices);
      std::cout << r.json.dump(2) << "\n";
      return r.ok ? 0 : 1;
    }

    bimult::AnalysisResult r = bimult::analyze(prob);
    if (!json_out.empty()) {
      std::ofstream out(json_out);
      out << r.json.dump(2) << "\n";
    }
    print_human_summary(r.json, std::cout);
    return r.ok ? 0 : 1;
  } catch (const bimult::SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const bimult::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
