#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuntz/classify.hpp"

namespace cuntz {

enum class Format { Markdown, Csv, Json, Latex };

/// "markdown" (or "md"), "csv", "json", "latex"; throws UnknownFormat.
Format parse_format(const std::string& name);
std::string to_string(Format f);

/// One line of the rank-2 table, every cell already rendered.
struct TableRow {
  std::string name;  // "ρ_1324 (≃ ρ_12)"
  std::string image_s1;
  std::string image_s2;
  std::string property;  // inn / out / irr / red
  std::string ht;        // "0" or "log 2"
  std::string ht_diag;
  int index = 0;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct XiRecord {
  std::vector<int> chain_dims;
  std::vector<std::string> basis;
  bool square_closed = false;
  bool condition_a = false;
  bool condition_b = false;
  std::optional<int> index;
  std::string failing_check;

  friend bool operator==(const XiRecord&, const XiRecord&) = default;
};

struct CommutantRecord {
  std::vector<int> dims;
  std::optional<int> witness_level;
  std::optional<std::string> witness;
  bool verified = false;

  friend bool operator==(const CommutantRecord&, const CommutantRecord&) = default;
};

struct FactorizationRecord {
  std::string identity;
  bool holds = false;
  bool index_agrees = false;

  friend bool operator==(const FactorizationRecord&, const FactorizationRecord&) = default;
};

/// Serializable evidence behind one row.
struct RowCertificate {
  std::string perm;  // cycle notation
  std::string one_line;
  std::optional<int> automorphism_order;
  /// v with rho = Ad(v), cycle notation.
  std::optional<std::string> inner_witness;
  XiRecord xi;
  CommutantRecord commutant;
  std::string diagonal_verdict;
  std::optional<int> diagonal_lag;
  std::vector<FactorizationRecord> factorizations;
  /// Representative of the inner-equivalence class, cycle notation.
  std::string class_representative;
  /// v with Ad(v) ∘ rho_representative = rho, when rho is not the representative.
  std::optional<std::string> equivalence_witness;
  std::optional<std::string> equivalence_witness_expansion;

  friend bool operator==(const RowCertificate&, const RowCertificate&) = default;
};

struct ReportMetadata {
  std::string engine_version = CUNTZ_VERSION;
  int depth_cap = 3;
  int rank_bound = 2;
  int order_bound = 8;
  int diagonal_depth = 6;
  int equivalence_classes = 0;
  /// Only recorded on request; reports stay byte-identical otherwise.
  std::optional<double> elapsed_seconds;

  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct ReportDoc {
  ReportMetadata metadata;
  std::vector<TableRow> rows;
  std::vector<RowCertificate> certificates;

  friend bool operator==(const ReportDoc&, const ReportDoc&) = default;
};

/// Ties are broken by table position; the member whose generator images
/// have the fewest terms names the class.
Permutation class_representative(const std::vector<Permutation>& members);

/// Classifies all 24 rank-2 permutations, computes equivalence classes and
/// the factorization checks, and assembles the rows in table order.
ReportDoc build_table(const ClassifyOptions& options = {}, int jobs = 1);

/// A one-row document for a single permutation.
ReportDoc classify_report(const Permutation& sigma, const ClassifyOptions& options = {});

/// Deterministic text; markdown and latex show the rows, json also the
/// certificates and metadata. With `details`, markdown appends the
/// certificates of every row as a list.
std::string render(const ReportDoc& doc, Format format, bool details = false);

nlohmann::ordered_json to_json(const ReportDoc& doc);
ReportDoc report_from_json(const nlohmann::json& j);
/// Throws ParseError on malformed input.
ReportDoc parse_report(const std::string& text);

/// The composition checks as a small report.
std::string render_checks(const std::vector<CompositionCheck>& checks, Format format);

/// Quotes a CSV cell when it contains a comma, quote or line break.
std::string csv_escape(const std::string& cell);

}  // namespace cuntz
