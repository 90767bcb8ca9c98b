#include "cuntz/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cuntz/error.hpp"
#include "cuntz/parallel.hpp"

namespace cuntz {

using nlohmann::json;
using nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "markdown" || name == "md") return Format::Markdown;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "latex" || name == "tex") return Format::Latex;
  throw Error(ErrorKind::UnknownFormat, "'" + name + "' (expected markdown, csv, json or latex)");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Markdown: return "markdown";
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    case Format::Latex: return "latex";
  }
  return "?";
}

namespace {

std::size_t term_count(const Permutation& p) {
  const PermEndomorphism rho(p);
  return rho.endo().image(1).size() + rho.endo().image(2).size();
}

std::size_t table_position(const Permutation& p) {
  static const std::vector<Permutation> order = rank2_table_order();
  return static_cast<std::size_t>(std::find(order.begin(), order.end(), p) - order.begin());
}

std::string row_name(const Permutation& p, const Permutation& representative) {
  std::string name = p.is_identity() ? "ρ_id = id" : rho_name(p);
  if (representative != p) name += " (≃ " + rho_name(representative) + ")";
  return name;
}

TableRow make_row(const Classification& c, const Permutation& representative) {
  const PermEndomorphism rho(c.perm);
  TableRow row;
  row.name = row_name(c.perm, representative);
  row.image_s1 = to_compact_string(rho.endo().image(1));
  row.image_s2 = to_compact_string(rho.endo().image(2));
  row.property = to_string(c.property);
  row.ht = c.entropy_zero ? "0" : "log 2";
  row.ht_diag = c.diagonal_entropy_zero ? "0" : "log 2";
  row.index = c.index;
  return row;
}

RowCertificate make_certificate(const Classification& c, const Permutation& representative,
                                const std::vector<CompositionCheck>& checks, int rank_bound) {
  RowCertificate cert;
  cert.perm = c.perm.cycle_notation();
  cert.one_line = c.perm.one_line();
  cert.automorphism_order = c.automorphism_order;
  if (c.inner_witness) cert.inner_witness = c.inner_witness->witness.cycle_notation();

  cert.xi.chain_dims = c.xi.chain_dims;
  for (const auto& e : c.xi.xi.basis_elements()) cert.xi.basis.push_back(to_string(e));
  cert.xi.square_closed = c.xi.square_closed;
  cert.xi.condition_a = c.xi.condition_a;
  cert.xi.condition_b = c.xi.condition_b;
  cert.xi.index = c.xi.index;
  cert.xi.failing_check = c.xi.failing_check;

  cert.commutant.dims = c.commutant.dims;
  cert.commutant.witness_level = c.commutant.witness_level;
  if (c.commutant.witness) cert.commutant.witness = to_string(*c.commutant.witness);
  cert.commutant.verified = c.commutant.verified;

  cert.diagonal_verdict = to_string(c.diagonal.verdict);
  cert.diagonal_lag = c.diagonal.lag;

  for (const auto& check : checks)
    if (check.identity.lhs == c.perm)
      cert.factorizations.push_back({check.identity.str(), check.holds, check.index_agrees()});

  cert.class_representative = representative.cycle_notation();
  if (representative != c.perm) {
    const auto w = inner_equivalence_witness(PermEndomorphism(representative), PermEndomorphism(c.perm), rank_bound);
    if (!w) throw Error(ErrorKind::ConsistencyViolation, "class member without a direct witness: " + cert.perm);
    cert.equivalence_witness = w->witness.cycle_notation();
    cert.equivalence_witness_expansion = to_compact_string(w->witness_unitary);
  }
  return cert;
}

void check_class_invariance(const EquivalencePartition& partition, const std::map<Permutation, Classification>& by_perm) {
  for (const auto& cls : partition.classes) {
    const auto& first = by_perm.at(cls.front());
    for (const auto& p : cls) {
      const auto& c = by_perm.at(p);
      const bool same_kind = (c.property == Property::Reducible) == (first.property == Property::Reducible);
      if (c.index != first.index || !same_kind)
        throw Error(ErrorKind::ConsistencyViolation,
                    "index or reducibility differs inside the class of " + first.perm.cycle_notation());
    }
  }
}

}  // namespace

Permutation class_representative(const std::vector<Permutation>& members) {
  if (members.empty()) throw Error(ErrorKind::ConsistencyViolation, "empty equivalence class");
  return *std::min_element(members.begin(), members.end(), [](const Permutation& a, const Permutation& b) {
    const auto ta = term_count(a), tb = term_count(b);
    if (ta != tb) return ta < tb;
    return table_position(a) < table_position(b);
  });
}

ReportDoc build_table(const ClassifyOptions& options, int jobs) {
  const auto perms = rank2_table_order();
  std::vector<std::optional<Classification>> slots(perms.size());
  parallel_for(perms.size(), jobs, [&](std::size_t i) { slots[i] = classify(perms[i], options); });

  std::map<Permutation, Classification> by_perm;
  for (auto& s : slots) by_perm.emplace(s->perm, *s);

  const auto partition = equivalence_classes(options.rank_bound, jobs);
  check_class_invariance(partition, by_perm);

  std::vector<CompositionCheck> checks;
  for (const auto& identity : composition_identities())
    checks.push_back(check_identity(identity, [&](const Permutation& p) { return by_perm.at(p).index; }));

  ReportDoc doc;
  doc.metadata.depth_cap = options.depth_cap;
  doc.metadata.rank_bound = options.rank_bound;
  doc.metadata.order_bound = options.order_bound;
  doc.metadata.diagonal_depth = options.diagonal_depth;
  doc.metadata.equivalence_classes = static_cast<int>(partition.classes.size());
  for (const auto& p : perms) {
    const auto rep = class_representative(partition.class_of(p));
    doc.rows.push_back(make_row(by_perm.at(p), rep));
    doc.certificates.push_back(make_certificate(by_perm.at(p), rep, checks, options.rank_bound));
  }
  return doc;
}

ReportDoc classify_report(const Permutation& sigma, const ClassifyOptions& options) {
  const auto c = classify(sigma, options);
  const auto partition = equivalence_classes(options.rank_bound);
  const auto rep = class_representative(partition.class_of(sigma));
  std::vector<CompositionCheck> checks;
  for (const auto& identity : composition_identities())
    if (identity.lhs == sigma) checks.push_back(check_identity(identity, options));

  ReportDoc doc;
  doc.metadata.depth_cap = options.depth_cap;
  doc.metadata.rank_bound = options.rank_bound;
  doc.metadata.order_bound = options.order_bound;
  doc.metadata.diagonal_depth = options.diagonal_depth;
  doc.metadata.equivalence_classes = static_cast<int>(partition.classes.size());
  doc.rows.push_back(make_row(c, rep));
  doc.certificates.push_back(make_certificate(c, rep, checks, options.rank_bound));
  return doc;
}

// ---------------------------------------------------------------- JSON

namespace {

template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

ordered_json cert_json(const RowCertificate& c) {
  ordered_json j;
  j["perm"] = c.perm;
  j["one_line"] = c.one_line;
  j["automorphism_order"] = opt(c.automorphism_order);
  j["inner_witness"] = opt(c.inner_witness);
  j["xi"] = {{"chain_dims", c.xi.chain_dims},       {"basis", c.xi.basis},
             {"square_closed", c.xi.square_closed}, {"condition_a", c.xi.condition_a},
             {"condition_b", c.xi.condition_b},     {"index", opt(c.xi.index)},
             {"failing_check", c.xi.failing_check}};
  j["commutant"] = {{"dims", c.commutant.dims},
                    {"witness_level", opt(c.commutant.witness_level)},
                    {"witness", opt(c.commutant.witness)},
                    {"verified", c.commutant.verified}};
  j["diagonal"] = {{"verdict", c.diagonal_verdict}, {"lag", opt(c.diagonal_lag)}};
  j["factorizations"] = ordered_json::array();
  for (const auto& f : c.factorizations)
    j["factorizations"].push_back({{"identity", f.identity}, {"holds", f.holds}, {"index_agrees", f.index_agrees}});
  j["equivalence"] = {{"representative", c.class_representative},
                      {"witness", opt(c.equivalence_witness)},
                      {"witness_expansion", opt(c.equivalence_witness_expansion)}};
  return j;
}

RowCertificate cert_from(const json& j) {
  RowCertificate c;
  c.perm = j.at("perm").get<std::string>();
  c.one_line = j.at("one_line").get<std::string>();
  c.automorphism_order = get_opt<int>(j, "automorphism_order");
  c.inner_witness = get_opt<std::string>(j, "inner_witness");
  const auto& xi = j.at("xi");
  c.xi.chain_dims = xi.at("chain_dims").get<std::vector<int>>();
  c.xi.basis = xi.at("basis").get<std::vector<std::string>>();
  c.xi.square_closed = xi.at("square_closed").get<bool>();
  c.xi.condition_a = xi.at("condition_a").get<bool>();
  c.xi.condition_b = xi.at("condition_b").get<bool>();
  c.xi.index = get_opt<int>(xi, "index");
  c.xi.failing_check = xi.at("failing_check").get<std::string>();
  const auto& com = j.at("commutant");
  c.commutant.dims = com.at("dims").get<std::vector<int>>();
  c.commutant.witness_level = get_opt<int>(com, "witness_level");
  c.commutant.witness = get_opt<std::string>(com, "witness");
  c.commutant.verified = com.at("verified").get<bool>();
  c.diagonal_verdict = j.at("diagonal").at("verdict").get<std::string>();
  c.diagonal_lag = get_opt<int>(j.at("diagonal"), "lag");
  for (const auto& f : j.at("factorizations"))
    c.factorizations.push_back(
        {f.at("identity").get<std::string>(), f.at("holds").get<bool>(), f.at("index_agrees").get<bool>()});
  const auto& eq = j.at("equivalence");
  c.class_representative = eq.at("representative").get<std::string>();
  c.equivalence_witness = get_opt<std::string>(eq, "witness");
  c.equivalence_witness_expansion = get_opt<std::string>(eq, "witness_expansion");
  return c;
}

}  // namespace

ordered_json to_json(const ReportDoc& doc) {
  ordered_json meta;
  meta["engine_version"] = doc.metadata.engine_version;
  meta["depth_cap"] = doc.metadata.depth_cap;
  meta["rank_bound"] = doc.metadata.rank_bound;
  meta["order_bound"] = doc.metadata.order_bound;
  meta["diagonal_depth"] = doc.metadata.diagonal_depth;
  meta["equivalence_classes"] = doc.metadata.equivalence_classes;
  if (doc.metadata.elapsed_seconds) meta["elapsed_seconds"] = *doc.metadata.elapsed_seconds;

  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    const auto& r = doc.rows[i];
    ordered_json row;
    row["name"] = r.name;
    row["image_s1"] = r.image_s1;
    row["image_s2"] = r.image_s2;
    row["property"] = r.property;
    row["ht"] = r.ht;
    row["ht_diag"] = r.ht_diag;
    row["index"] = r.index;
    if (i < doc.certificates.size()) row["certificate"] = cert_json(doc.certificates[i]);
    rows.push_back(std::move(row));
  }
  ordered_json j;
  j["metadata"] = std::move(meta);
  j["rows"] = std::move(rows);
  return j;
}

ReportDoc report_from_json(const json& j) {
  ReportDoc doc;
  const auto& m = j.at("metadata");
  doc.metadata.engine_version = m.at("engine_version").get<std::string>();
  doc.metadata.depth_cap = m.at("depth_cap").get<int>();
  doc.metadata.rank_bound = m.at("rank_bound").get<int>();
  doc.metadata.order_bound = m.at("order_bound").get<int>();
  doc.metadata.diagonal_depth = m.at("diagonal_depth").get<int>();
  doc.metadata.equivalence_classes = m.at("equivalence_classes").get<int>();
  doc.metadata.elapsed_seconds = get_opt<double>(m, "elapsed_seconds");
  for (const auto& r : j.at("rows")) {
    TableRow row;
    row.name = r.at("name").get<std::string>();
    row.image_s1 = r.at("image_s1").get<std::string>();
    row.image_s2 = r.at("image_s2").get<std::string>();
    row.property = r.at("property").get<std::string>();
    row.ht = r.at("ht").get<std::string>();
    row.ht_diag = r.at("ht_diag").get<std::string>();
    row.index = r.at("index").get<int>();
    doc.rows.push_back(std::move(row));
    if (r.contains("certificate")) doc.certificates.push_back(cert_from(r.at("certificate")));
  }
  return doc;
}

ReportDoc parse_report(const std::string& text) {
  try {
    return report_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------- text

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

namespace {

// "ρ_134 (≃ ρ_142)" -> "\rho_{134} (\simeq \rho_{142})"
std::string latex_name(const std::string& name) {
  std::istringstream in(name);
  std::string token, out;
  while (in >> token) {
    std::string open, close;
    if (token.starts_with("(")) open = "(", token.erase(0, 1);
    if (token.ends_with(")") && token.starts_with("ρ_") && token.find('(') == std::string::npos &&
        token.size() > 2)
      close = ")", token.pop_back();
    else if (token == "id)")
      close = ")", token.pop_back();
    else if (token.starts_with("ρ_(") && token.ends_with("))"))
      close = ")", token.pop_back();

    std::string body;
    if (token == "≃") {
      body = "\\simeq";
    } else if (token == "id") {
      body = "{\\rm id}";
    } else if (token.starts_with("ρ_")) {
      body = "\\rho_{" + token.substr(std::string("ρ_").size()) + "}";
    } else {
      body = token;
    }
    if (!out.empty()) out += ' ';
    out += open + body + close;
  }
  return out;
}

std::string latex_ht(const std::string& ht) { return ht == "0" ? "0" : "\\log 2"; }

void append_details(std::ostringstream& out, const ReportDoc& doc) {
  auto join = [](const auto& items) {
    std::string s;
    for (const auto& x : items) {
      if (!s.empty()) s += ", ";
      if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::string>)
        s += x;
      else
        s += std::to_string(x);
    }
    return s;
  };
  for (std::size_t i = 0; i < doc.certificates.size(); ++i) {
    const auto& c = doc.certificates[i];
    out << "\n### " << doc.rows[i].name << "\n\n";
    out << "- permutation: " << c.perm << " (one-line " << c.one_line << ")\n";
    out << "- automorphism order: " << (c.automorphism_order ? std::to_string(*c.automorphism_order) : "none up to "
                                                                 + std::to_string(doc.metadata.order_bound)) << "\n";
    if (c.automorphism_order)
      out << "- inner witness: " << (c.inner_witness ? "u_" + *c.inner_witness
                                                     : "no witness up to rank " + std::to_string(doc.metadata.rank_bound))
          << "\n";
    out << "- Xi chain: " << join(c.xi.chain_dims) << "\n";
    out << "- Xi basis: " << join(c.xi.basis) << "\n";
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "- Xi hypotheses: square-closed " << yn(c.xi.square_closed) << ", (a) " << yn(c.xi.condition_a)
        << ", (b) " << yn(c.xi.condition_b) << " -> " << (c.xi.index ? "dim " + std::to_string(*c.xi.index) : "inapplicable (" + c.xi.failing_check + ")")
        << "\n";
    out << "- commutant dims: " << join(c.commutant.dims) << "\n";
    if (c.commutant.witness)
      out << "- commutant witness (level " << *c.commutant.witness_level << "): " << *c.commutant.witness
          << (c.commutant.verified ? ", verified" : ", NOT verified") << "\n";
    out << "- diagonal: " << c.diagonal_verdict << "\n";
    for (const auto& f : c.factorizations)
      out << "- " << f.identity << ": " << (f.holds ? "holds" : "fails")
          << (f.index_agrees ? ", index agrees" : ", index disagrees") << "\n";
    out << "- class representative: " << c.class_representative;
    if (c.equivalence_witness) out << " via u_" << *c.equivalence_witness << " = " << *c.equivalence_witness_expansion;
    out << "\n";
  }
}

}  // namespace

std::string render(const ReportDoc& doc, Format format, bool details) {
  std::ostringstream out;
  switch (format) {
    case Format::Markdown:
      out << "| ρ_σ | ρ_σ(s_1) | ρ_σ(s_2) | property | ht(ρ_σ) | ht(ρ_σ\\|D_2) | Ind(ρ_σ) |\n";
      out << "|---|---|---|---|---|---|---|\n";
      for (const auto& r : doc.rows)
        out << "| " << r.name << " | " << r.image_s1 << " | " << r.image_s2 << " | " << r.property << " | " << r.ht
            << " | " << r.ht_diag << " | " << r.index << " |\n";
      if (details) append_details(out, doc);
      break;
    case Format::Csv:
      out << "name,image_s1,image_s2,property,ht,ht_diag,index\n";
      for (const auto& r : doc.rows)
        out << csv_escape(r.name) << ',' << csv_escape(r.image_s1) << ',' << csv_escape(r.image_s2) << ','
            << r.property << ',' << r.ht << ',' << r.ht_diag << ',' << r.index << '\n';
      break;
    case Format::Json:
      out << to_json(doc).dump(2) << '\n';
      break;
    case Format::Latex:
      out << "\\[\n\\begin{array}{lcccccc}\n";
      out << "\\hline \\rho_{\\sigma} & \\rho_{\\sigma}(s_{1}) & \\rho_{\\sigma}(s_{2}) & property & "
             "{\\rm ht}(\\rho_\\sigma) & {\\rm ht}(\\rho_\\sigma|_{{\\mathcal D}_2}) & {\\rm Ind}(\\rho_\\sigma)\\\\\n";
      out << "\\hline\n";
      for (const auto& r : doc.rows)
        out << latex_name(r.name) << " & " << r.image_s1 << " & " << r.image_s2 << " & {\\rm " << r.property
            << "} & " << latex_ht(r.ht) << " & " << latex_ht(r.ht_diag) << " & " << r.index << "\\\\\n";
      out << "\\hline\n\\end{array}\n\\]\n";
      break;
  }
  return out.str();
}

std::string render_checks(const std::vector<CompositionCheck>& checks, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Markdown:
      out << "| identity | holds | Ind(lhs) | product of indices |\n|---|---|---|---|\n";
      for (const auto& c : checks)
        out << "| " << c.identity.str() << " | " << (c.holds ? "yes" : "no") << " | " << c.lhs_index << " | "
            << c.product_index << " |\n";
      break;
    case Format::Csv:
      out << "identity,holds,lhs_index,product_index\n";
      for (const auto& c : checks)
        out << csv_escape(c.identity.str()) << ',' << (c.holds ? "true" : "false") << ',' << c.lhs_index << ','
            << c.product_index << '\n';
      break;
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& c : checks)
        arr.push_back({{"identity", c.identity.str()},
                       {"holds", c.holds},
                       {"lhs_index", c.lhs_index},
                       {"product_index", c.product_index},
                       {"index_agrees", c.index_agrees()}});
      out << ordered_json{{"identities", arr}}.dump(2) << '\n';
      break;
    }
    case Format::Latex:
      out << "\\begin{array}{lccc}\n\\hline identity & holds & {\\rm Ind} & \\prod {\\rm Ind}\\\\\n\\hline\n";
      for (const auto& c : checks) {
        std::string id = c.identity.str();
        out << id << " & " << (c.holds ? "yes" : "no") << " & " << c.lhs_index << " & " << c.product_index
            << "\\\\\n";
      }
      out << "\\hline\n\\end{array}\n";
      break;
  }
  return out.str();
}

}  // namespace cuntz
