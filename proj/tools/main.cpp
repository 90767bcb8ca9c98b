#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cuntz/error.hpp"
#include "cuntz/index.hpp"
#include "cuntz/reference.hpp"
#include "cuntz/report.hpp"
#include "cuntz/sweep.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_usage = 64;

int exit_code(cuntz::ErrorKind kind) {
  using cuntz::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidPermutation:
    case ErrorKind::ParseError:
    case ErrorKind::UnknownFormat:
    case ErrorKind::RankUnsupported:
    case ErrorKind::DepthTooLarge:
    case ErrorKind::BadLevels:
    case ErrorKind::InvalidWord:
      return exit_usage;
    default:
      return exit_inconclusive;
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw cuntz::Error(cuntz::ErrorKind::ParseError, "cannot write " + out_path);
  file << text;
}

std::string render_xi(const cuntz::Permutation& p, const cuntz::XiCertificate& cert, bool show_basis,
                      cuntz::Format format) {
  using cuntz::to_string;
  std::vector<std::string> basis;
  for (const auto& e : cert.xi.basis_elements()) basis.push_back(to_string(e));
  if (format == cuntz::Format::Json) {
    nlohmann::ordered_json j;
    j["perm"] = p.cycle_notation();
    j["chain_dims"] = cert.chain_dims;
    j["dimension"] = cert.xi.dimension();
    if (show_basis) j["basis"] = basis;
    j["square_closed"] = cert.square_closed;
    j["condition_a"] = cert.condition_a;
    j["condition_b"] = cert.condition_b;
    j["index"] = cert.index ? nlohmann::ordered_json(*cert.index) : nlohmann::ordered_json(nullptr);
    j["failing_check"] = cert.failing_check;
    return j.dump(2) + "\n";
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string chain;
  for (int d : cert.chain_dims) chain += (chain.empty() ? "" : " -> ") + std::to_string(d);
  std::string out = "σ = " + p.cycle_notation() + "\n";
  out += "chain: " + chain + "\n";
  out += "dim Xi: " + std::to_string(cert.xi.dimension()) + "\n";
  if (show_basis)
    for (const auto& b : basis) out += "  " + b + "\n";
  out += std::string("Xi^2 ⊆ Xi: ") + yn(cert.square_closed) + "\n";
  out += std::string("condition (a): ") + yn(cert.condition_a) + "\n";
  out += std::string("condition (b): ") + yn(cert.condition_b) + "\n";
  out += "index: " + (cert.index ? std::to_string(*cert.index) : "inapplicable (" + cert.failing_check + ")") + "\n";
  return out;
}

std::string render_results(const std::vector<cuntz::CheckResult>& results, cuntz::Format format) {
  if (format == cuntz::Format::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    return nlohmann::ordered_json{{"checks", arr}}.dump(2) + "\n";
  }
  std::string out;
  if (format == cuntz::Format::Csv) out = "check,passed,detail\n";
  for (const auto& r : results) {
    if (format == cuntz::Format::Csv)
      out += cuntz::csv_escape(r.name) + "," + (r.passed ? "true" : "false") + "," + cuntz::csv_escape(r.detail) + "\n";
    else
      out += std::string(r.passed ? "PASS" : "FAIL") + "  " + r.name + (r.detail.empty() ? "" : "  (" + r.detail + ")") + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of rank-2 permutation endomorphisms of O_2"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(CUNTZ_VERSION));

  std::string perm_text, format_name = "markdown", out_path;
  cuntz::ClassifyOptions options;
  int jobs = 1;
  bool timing = false, show_basis = false, details = true;
  cuntz::SweepOptions sweep_options;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "markdown, csv, json or latex")->capture_default_str();
    cmd->add_option("--out", out_path, "write the report to this file instead of stdout");
  };
  auto add_engine = [&](CLI::App* cmd) {
    cmd->add_option("--depth", options.depth_cap, "highest commutant level searched")->capture_default_str();
    cmd->add_option("--rank-bound", options.rank_bound, "largest rank of witness unitaries")->capture_default_str();
    cmd->add_option("--order-bound", options.order_bound, "largest n tried in rho^n = id")->capture_default_str();
    cmd->add_option("--diagonal-depth", options.diagonal_depth, "depth cap of the diagonal analysis")
        ->capture_default_str();
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify one rank-2 permutation");
  classify_cmd->add_option("--perm", perm_text, "cycle notation, e.g. (12)(34), or id")->required();
  classify_cmd->add_flag("!--no-details", details, "markdown: omit the certificate list");
  add_engine(classify_cmd);
  add_common(classify_cmd);

  auto* table_cmd = app.add_subcommand("table", "regenerate the table of all 24 rank-2 cases");
  table_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  table_cmd->add_flag("--timing", timing, "record elapsed time in the json metadata");
  add_engine(table_cmd);
  add_common(table_cmd);

  auto* xi_cmd = app.add_subcommand("xi", "compute the Xi subspace and index hypotheses");
  xi_cmd->add_option("--perm", perm_text, "cycle notation")->required();
  xi_cmd->add_flag("--show-basis", show_basis, "print a reduced-echelon basis");
  add_common(xi_cmd);

  auto* verify_cmd = app.add_subcommand("verify-paper", "check the regenerated table and identities");
  verify_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  add_common(verify_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "semi-classify all permutations of a rank");
  sweep_cmd->add_option("--rank", sweep_options.rank, "1, 2 or 3")->capture_default_str();
  sweep_cmd->add_option("--jobs", sweep_options.jobs, "worker threads")->capture_default_str();
  sweep_cmd->add_option("--order-bound", sweep_options.order_bound, "largest n tried in rho^n = id")
      ->capture_default_str();
  sweep_cmd->add_option("--depth", sweep_options.depth, "highest commutant level searched")->capture_default_str();
  add_common(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    const auto format = cuntz::parse_format(format_name);
    if (*classify_cmd) {
      const auto doc = cuntz::classify_report(cuntz::Permutation::parse(perm_text), options);
      emit(cuntz::render(doc, format, details), out_path);
    } else if (*table_cmd) {
      const auto start = std::chrono::steady_clock::now();
      auto doc = cuntz::build_table(options, jobs);
      if (timing)
        doc.metadata.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      emit(cuntz::render(doc, format), out_path);
    } else if (*xi_cmd) {
      const auto p = cuntz::Permutation::parse(perm_text);
      emit(render_xi(p, cuntz::jones_index_via_xi(cuntz::PermEndomorphism(p)), show_basis, format), out_path);
    } else if (*verify_cmd) {
      const auto results = cuntz::run_reference_checks(options, jobs);
      emit(render_results(results, format), out_path);
      for (const auto& r : results)
        if (!r.passed) return exit_mismatch;
    } else if (*sweep_cmd) {
      emit(cuntz::render(cuntz::sweep(sweep_options), format), out_path);
    }
  } catch (const cuntz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_inconclusive;
  }
  return exit_ok;
}
