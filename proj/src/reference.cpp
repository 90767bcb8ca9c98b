#include "cuntz/reference.hpp"

#include "cuntz/index.hpp"

namespace cuntz {

const std::vector<TableRow>& reference_table() {
  static const std::vector<TableRow> rows = {
      {"ρ_id = id", "s_{1}", "s_{2}", "inn", "0", "0", 1},
      {"ρ_12", "s_{12,1}+s_{11,2}", "s_{2}", "irr", "log 2", "0", 2},
      {"ρ_13", "s_{21,1}+s_{12,2}", "s_{11,1}+s_{22,2}", "irr", "log 2", "log 2", 2},
      {"ρ_14", "s_{22,1}+s_{12,2}", "s_{21,1}+s_{11,2}", "red", "log 2", "log 2", 4},
      {"ρ_23", "s_{11,1}+s_{21,2}", "s_{12,1}+s_{22,2}", "red", "log 2", "log 2", 4},
      {"ρ_24", "s_{11,1}+s_{22,2}", "s_{21,1}+s_{12,2}", "irr", "log 2", "log 2", 2},
      {"ρ_34", "s_{1}", "s_{22,1}+s_{21,2}", "irr", "log 2", "0", 2},
      {"ρ_123", "s_{12,1}+s_{21,2}", "s_{11,1}+s_{22,2}", "red", "log 2", "log 2", 4},
      {"ρ_132", "s_{21,1}+s_{11,2}", "s_{12,1}+s_{22,2}", "red", "log 2", "log 2", 4},
      {"ρ_124", "s_{12,1}+s_{22,2}", "s_{21,1}+s_{11,2}", "red", "log 2", "log 2", 4},
      {"ρ_142", "s_{22,1}+s_{11,2}", "s_{21,1}+s_{12,2}", "irr", "log 2", "log 2", 4},
      {"ρ_134 (≃ ρ_142)", "s_{21,1}+s_{12,2}", "s_{22,1}+s_{11,2}", "irr", "log 2", "log 2", 4},
      {"ρ_143", "s_{22,1}+s_{12,2}", "s_{11,1}+s_{21,2}", "red", "log 2", "log 2", 4},
      {"ρ_234", "s_{11,1}+s_{21,2}", "s_{22,1}+s_{12,2}", "red", "log 2", "log 2", 4},
      {"ρ_243 (≃ ρ_123)", "s_{11,1}+s_{22,2}", "s_{12,1}+s_{21,2}", "red", "log 2", "log 2", 4},
      {"ρ_1234 (≃ ρ_24)", "s_{12,1}+s_{21,2}", "s_{22,1}+s_{11,2}", "irr", "log 2", "log 2", 2},
      {"ρ_1243", "s_{12,1}+s_{22,2}", "s_{11,1}+s_{21,2}", "red", "log 2", "log 2", 4},
      {"ρ_1324 (≃ ρ_12)", "s_{2}", "s_{12,1}+s_{11,2}", "irr", "log 2", "0", 2},
      {"ρ_1342", "s_{21,1}+s_{11,2}", "s_{22,1}+s_{12,2}", "red", "log 2", "log 2", 4},
      {"ρ_1423 (≃ ρ_34)", "s_{22,1}+s_{21,2}", "s_{1}", "irr", "log 2", "0", 2},
      {"ρ_1432 (≃ ρ_13)", "s_{22,1}+s_{11,2}", "s_{12,1}+s_{21,2}", "irr", "log 2", "log 2", 2},
      {"ρ_(12)(34) (≃ ρ_(13)(24))", "s_{12,1}+s_{11,2}", "s_{22,1}+s_{21,2}", "out", "0", "0", 1},
      {"ρ_(13)(24)", "s_{2}", "s_{1}", "out", "0", "0", 1},
      {"ρ_(14)(23) (≃ id)", "s_{22,1}+s_{21,2}", "s_{12,1}+s_{11,2}", "inn", "0", "0", 1},
  };
  return rows;
}

namespace {

template <class Get>
CheckResult compare_column(const std::string& name, const std::vector<TableRow>& got, Get get) {
  const auto& want = reference_table();
  CheckResult r{name, got.size() == want.size(), ""};
  if (!r.passed) r.detail = std::to_string(got.size()) + " rows";
  for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i)
    if (get(got[i]) != get(want[i])) {
      if (r.passed) r.detail = want[i].name + ": got '" + get(got[i]) + "', expected '" + get(want[i]) + "'";
      r.passed = false;
    }
  return r;
}

CheckResult xi_example(const char* perm, const std::vector<Element>& basis, int index) {
  const PermEndomorphism rho(Permutation::parse(perm));
  const auto cert = jones_index_via_xi(rho);
  const Subspace want = basis.empty() ? Subspace::full(1) : Subspace::span_elements(1, basis);
  CheckResult r{std::string("Xi for ") + perm, cert.xi == want && cert.index == index, ""};
  r.detail = "dim " + std::to_string(cert.xi.dimension()) + ", index " +
             (cert.index ? std::to_string(*cert.index) : "inapplicable");
  return r;
}

}  // namespace

std::vector<CheckResult> run_reference_checks(const ClassifyOptions& options, int jobs) {
  std::vector<CheckResult> out;
  const ReportDoc doc = build_table(options, jobs);
  out.push_back(compare_column("names", doc.rows, [](const TableRow& r) { return r.name; }));
  out.push_back(compare_column("images of s_1", doc.rows, [](const TableRow& r) { return r.image_s1; }));
  out.push_back(compare_column("images of s_2", doc.rows, [](const TableRow& r) { return r.image_s2; }));
  out.push_back(compare_column("property", doc.rows, [](const TableRow& r) { return r.property; }));
  out.push_back(compare_column("ht", doc.rows, [](const TableRow& r) { return r.ht; }));
  out.push_back(compare_column("ht on D_2", doc.rows, [](const TableRow& r) { return r.ht_diag; }));
  out.push_back(compare_column("index", doc.rows, [](const TableRow& r) { return std::to_string(r.index); }));
  out.push_back({"16 inner equivalence classes", doc.metadata.equivalence_classes == 16,
                 std::to_string(doc.metadata.equivalence_classes) + " classes"});

  const auto s = [](const char* text) { return parse_element(text); };
  out.push_back(xi_example("(12)", {Element::unit(), s("s_{1,2} + s_{2,1}")}, 2));
  out.push_back(xi_example("(13)", {s("s_{1,1}"), s("s_{2,2}")}, 2));
  out.push_back(xi_example("(142)", {}, 4));

  for (const auto& check : verify_composition_identities(options))
    out.push_back({check.identity.str(), check.holds && check.index_agrees(),
                   std::string(check.holds ? "holds" : "fails") + ", Ind " + std::to_string(check.lhs_index) +
                       " vs product " + std::to_string(check.product_index)});
  return out;
}

}  // namespace cuntz
