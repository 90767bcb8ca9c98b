#include "cuntz/sweep.hpp"

#include <sstream>

#include "cuntz/error.hpp"
#include "cuntz/index.hpp"
#include "cuntz/parallel.hpp"

namespace cuntz {

LevelPermutation LevelPermutation::identity(int level) {
  LevelPermutation p{level, std::vector<std::uint32_t>(std::size_t{1} << level)};
  for (std::uint32_t x = 0; x < p.map.size(); ++x) p.map[x] = x;
  return p;
}

LevelPermutation LevelPermutation::from(const Permutation& p) {
  LevelPermutation out{p.rank(), {}};
  for (std::size_t x = 0; x < p.size(); ++x) out.map.push_back(static_cast<std::uint32_t>(p.images()[x]));
  return out;
}

bool LevelPermutation::is_identity() const {
  for (std::uint32_t x = 0; x < map.size(); ++x)
    if (map[x] != x) return false;
  return true;
}

LevelPermutation LevelPermutation::pad_to(int target) const {
  if (target < level) throw Error(ErrorKind::LevelTooSmall, "cannot pad to a lower level");
  const int extra = target - level;
  const std::uint32_t mask = (std::uint32_t{1} << extra) - 1;
  LevelPermutation out{target, std::vector<std::uint32_t>(std::size_t{1} << target)};
  for (std::uint32_t x = 0; x < out.map.size(); ++x) out.map[x] = (map[x >> extra] << extra) | (x & mask);
  return out;
}

LevelPermutation LevelPermutation::shift() const {
  LevelPermutation out{level + 1, std::vector<std::uint32_t>(std::size_t{2} << level)};
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t r = 0; r < map.size(); ++r) out.map[(a << level) | r] = (a << level) | map[r];
  return out;
}

LevelPermutation LevelPermutation::inverse() const {
  LevelPermutation out{level, std::vector<std::uint32_t>(map.size())};
  for (std::uint32_t x = 0; x < map.size(); ++x) out.map[map[x]] = x;
  return out;
}

LevelPermutation LevelPermutation::reduced() const {
  LevelPermutation out = *this;
  while (out.level > 0) {
    bool trailing_identity = true;
    for (std::uint32_t x = 0; x < out.map.size() && trailing_identity; x += 2)
      trailing_identity = (out.map[x] & 1) == 0 && out.map[x + 1] == out.map[x] + 1;
    if (!trailing_identity) break;
    LevelPermutation smaller{out.level - 1, std::vector<std::uint32_t>(out.map.size() / 2)};
    for (std::uint32_t x = 0; x < smaller.map.size(); ++x) smaller.map[x] = out.map[2 * x] >> 1;
    out = std::move(smaller);
  }
  return out;
}

LevelPermutation operator*(const LevelPermutation& a, const LevelPermutation& b) {
  const int level = std::max(a.level, b.level);
  const auto pa = a.pad_to(level), pb = b.pad_to(level);
  LevelPermutation out{level, std::vector<std::uint32_t>(pa.map.size())};
  for (std::uint32_t x = 0; x < out.map.size(); ++x) out.map[x] = pa.map[pb.map[x]];
  return out;
}

LevelPermutation lambda(const LevelPermutation& u, const LevelPermutation& v) {
  if (v.level == 0) return v;
  LevelPermutation w = u;
  LevelPermutation shifted = u;
  for (int j = 1; j < v.level; ++j) {
    shifted = shifted.shift();
    w = w * shifted;
  }
  return (w * v * w.inverse()).reduced();
}

std::optional<int> permutation_automorphism_order(const Permutation& sigma, int bound) {
  if (bound < 1) throw Error(ErrorKind::BadLevels, "order bound must be at least 1");
  const auto u = LevelPermutation::from(sigma).reduced();
  LevelPermutation power = u;
  for (int n = 1; n <= bound; ++n) {
    if (power.is_identity()) return n;
    if (n < bound) power = (lambda(u, power) * u).reduced();
  }
  return std::nullopt;
}

std::string to_string(SweepVerdict v) {
  switch (v) {
    case SweepVerdict::Automorphism: return "automorphism";
    case SweepVerdict::ReducibleWitnessFound: return "reducible-witness-found";
    case SweepVerdict::Unknown: return "unknown";
  }
  return "?";
}

std::size_t SweepReport::count(SweepVerdict v) const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.verdict == v;
  return n;
}

namespace {

SweepRow sweep_one(const Permutation& p, const SweepOptions& options) {
  SweepRow row;
  row.perm = p;
  row.order = permutation_automorphism_order(p, options.order_bound);
  if (row.order) {
    row.verdict = SweepVerdict::Automorphism;
    return row;
  }
  for (int k = 1; k <= options.depth; ++k) {
    const Subspace fixed = permutation_commutant(p, k);
    row.commutant_dims.push_back(static_cast<int>(fixed.dimension()));
    if (const auto w = non_scalar_element(fixed)) {
      if (!commutes_with_image(PermEndomorphism(p).endo(), *w))
        throw Error(ErrorKind::ConsistencyViolation, p.one_line() + ": commutant witness fails to commute");
      row.verdict = SweepVerdict::ReducibleWitnessFound;
      row.witness = to_string(*w);
      break;
    }
  }
  return row;
}

}  // namespace

SweepReport sweep(const SweepOptions& options) {
  if (options.rank < 1 || options.rank > 3)
    throw Error(ErrorKind::RankUnsupported, "sweep supports ranks 1 to 3");
  if (options.depth < 1) throw Error(ErrorKind::BadLevels, "sweep depth must be at least 1");
  const auto perms = all_permutations(options.rank);
  SweepReport report{options, std::vector<SweepRow>(perms.size())};
  parallel_for(perms.size(), options.jobs, [&](std::size_t i) { report.rows[i] = sweep_one(perms[i], options); });
  return report;
}

std::string render(const SweepReport& report, Format format) {
  const SweepVerdict verdicts[] = {SweepVerdict::Automorphism, SweepVerdict::ReducibleWitnessFound,
                                   SweepVerdict::Unknown};
  auto dims = [](const SweepRow& r) {
    std::string s;
    for (int d : r.commutant_dims) s += (s.empty() ? "" : " ") + std::to_string(d);
    return s;
  };
  std::ostringstream out;
  switch (format) {
    case Format::Markdown:
      out << "Rank " << report.options.rank << ": " << report.rows.size() << " permutations (order bound "
          << report.options.order_bound << ", commutant depth " << report.options.depth << ")\n\n";
      out << "| property | count |\n|---|---|\n";
      for (auto v : verdicts) out << "| " << to_string(v) << " | " << report.count(v) << " |\n";
      out << "\nAutomorphisms:\n\n| σ | order |\n|---|---|\n";
      for (const auto& r : report.rows)
        if (r.order) out << "| " << r.perm.one_line() << " | " << *r.order << " |\n";
      break;
    case Format::Csv:
      out << "perm,property,order,commutant_dims,witness\n";
      for (const auto& r : report.rows)
        out << r.perm.one_line() << ',' << to_string(r.verdict) << ',' << (r.order ? std::to_string(*r.order) : "")
            << ',' << dims(r) << ',' << csv_escape(r.witness.value_or("")) << '\n';
      break;
    case Format::Json: {
      nlohmann::ordered_json j;
      j["rank"] = report.options.rank;
      j["order_bound"] = report.options.order_bound;
      j["depth"] = report.options.depth;
      for (auto v : verdicts) j["counts"][to_string(v)] = report.count(v);
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : report.rows) {
        nlohmann::ordered_json row;
        row["perm"] = r.perm.one_line();
        row["property"] = to_string(r.verdict);
        row["order"] = r.order ? nlohmann::ordered_json(*r.order) : nlohmann::ordered_json(nullptr);
        row["commutant_dims"] = r.commutant_dims;
        row["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
        j["rows"].push_back(std::move(row));
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Latex:
      out << "\\begin{array}{lc}\n\\hline property & count\\\\\n\\hline\n";
      for (auto v : verdicts) out << "{\\rm " << to_string(v) << "} & " << report.count(v) << "\\\\\n";
      out << "\\hline\n\\end{array}\n";
      break;
  }
  return out.str();
}

}  // namespace cuntz
