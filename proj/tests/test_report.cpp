#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cuntz/error.hpp"
#include "cuntz/reference.hpp"
#include "cuntz/report.hpp"

using namespace cuntz;

namespace {

const ReportDoc& table() {
  static const ReportDoc doc = build_table();
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli-report") {
  TEST_CASE("build_table") {
    const auto& doc = table();
    REQUIRE(doc.rows.size() == 24);
    REQUIRE(doc.certificates.size() == 24);
    CHECK(doc.rows == reference_table());
    std::map<std::string, int> counts;
    for (const auto& r : doc.rows) ++counts[r.property];
    CHECK(counts["inn"] == 2);
    CHECK(counts["out"] == 2);
    CHECK(counts["irr"] == 10);
    CHECK(counts["red"] == 10);
    CHECK(doc.metadata.equivalence_classes == 16);
  }

  TEST_CASE("certificates") {
    const auto& doc = table();
    const auto& c142 = doc.certificates[10];
    CHECK(c142.perm == "(142)");
    CHECK(c142.xi.basis.size() == 4);
    CHECK(c142.xi.index == 4);
    const auto& c14 = doc.certificates[3];
    CHECK(c14.commutant.witness.has_value());
    CHECK(c14.commutant.verified);
    const auto& c134 = doc.certificates[11];
    CHECK(c134.class_representative == "(142)");
    CHECK(c134.equivalence_witness == "(13)(24)");
    REQUIRE(c134.factorizations.size() == 1);
    CHECK(c134.factorizations[0].identity == "ρ_134 = ρ_142 ∘ ρ_(13)(24)");
    CHECK(c134.factorizations[0].holds);
    CHECK(doc.certificates[23].inner_witness == "(13)(24)");
    CHECK_FALSE(doc.certificates[22].inner_witness.has_value());
  }

  TEST_CASE("markdown golden") {
    CHECK(render(table(), Format::Markdown) == read_file(std::string(CUNTZ_GOLDEN_DIR) + "/rank2_table.md"));
  }

  TEST_CASE("csv") {
    const auto text = render(table(), Format::Csv);
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    CHECK(line == "name,image_s1,image_s2,property,ht,ht_diag,index");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 24);
    CHECK(text.find("ρ_12,\"s_{12,1}+s_{11,2}\",s_{2},irr,log 2,0,2\n") != std::string::npos);
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"x\", y") == "\"say \"\"x\"\", y\"");
    CHECK(csv_escape("plain") == "plain");
  }

  TEST_CASE("json round trip") {
    const auto text = render(table(), Format::Json);
    const auto back = parse_report(text);
    CHECK(back == table());
    CHECK(render(back, Format::Json) == text);
    auto timed = table();
    timed.metadata.elapsed_seconds = 0.25;
    CHECK(parse_report(render(timed, Format::Json)) == timed);
    CHECK_THROWS_AS(parse_report("{\"rows\": 3}"), Error);
    CHECK_THROWS_AS(parse_report("not json"), Error);
  }

  TEST_CASE("latex") {
    const auto text = render(table(), Format::Latex);
    CHECK(text.find("\\begin{array}{lcccccc}") != std::string::npos);
    CHECK(text.find("\\rho_{134} (\\simeq \\rho_{142}) & s_{21,1}+s_{12,2} & s_{22,1}+s_{11,2} & {\\rm irr} & "
                    "\\log 2 & \\log 2 & 4\\\\") != std::string::npos);
    CHECK(text.find("\\rho_{(14)(23)} (\\simeq {\\rm id})") != std::string::npos);
    CHECK(text.find("\\rho_{id} = {\\rm id} & s_{1} & s_{2} & {\\rm inn} & 0 & 0 & 1\\\\") != std::string::npos);
    CHECK(text.find("\\rho_{(12)(34)} (\\simeq \\rho_{(13)(24)})") != std::string::npos);
  }

  TEST_CASE("formats") {
    CHECK(parse_format("markdown") == Format::Markdown);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("latex") == Format::Latex);
    CHECK_THROWS_AS(parse_format("yaml"), Error);
  }

  TEST_CASE("deterministic under parallel execution") {
    const auto serial = render(build_table({}, 1), Format::Json);
    const auto parallel = render(build_table({}, 4), Format::Json);
    CHECK(serial == parallel);
    CHECK(serial == render(table(), Format::Json));
  }

  TEST_CASE("single classification") {
    const auto doc = classify_report(Permutation::parse("(1324)"));
    REQUIRE(doc.rows.size() == 1);
    CHECK(doc.rows[0] == reference_table()[17]);
    const auto md = render(doc, Format::Markdown, true);
    CHECK(md.find("class representative: (12) via u_(13)(24)") != std::string::npos);
    CHECK(md.find("ρ_1324 = Ad(u_(13)(24)) ∘ ρ_12: holds, index agrees") != std::string::npos);
  }

  TEST_CASE("composition checks render") {
    const auto checks = verify_composition_identities();
    const auto csv = render_checks(checks, Format::Csv);
    CHECK(csv.find("identity,holds,lhs_index,product_index\n") == 0);
    CHECK(render_checks(checks, Format::Json).find("\"index_agrees\": true") != std::string::npos);
  }

  TEST_CASE("reference checks") {
    for (const auto& r : run_reference_checks()) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.passed);
    }
  }
}
