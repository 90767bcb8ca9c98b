#include "cuntz/diagonal.hpp"

#include <map>

#include "cuntz/error.hpp"

namespace cuntz {

CylinderSet::CylinderSet(int depth, std::set<Word> members) : depth_(depth), members_(std::move(members)) {
  if (depth < 0 || depth > max_depth + 8)
    throw Error(ErrorKind::DepthTooLarge, "cylinder depth " + std::to_string(depth));
  for (const auto& w : members_)
    if (w.size() != depth_) throw Error(ErrorKind::InvalidWord, "cylinder word '" + w.str() + "' has the wrong depth");
}

CylinderSet CylinderSet::refine(int levels) const {
  std::set<Word> out;
  for (const auto& w : members_)
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << levels); ++i) out.insert(w + Word::from_index(i, levels));
  return CylinderSet(depth_ + levels, std::move(out));
}

std::string CylinderSet::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& w : members_) {
    if (!first) out += ", ";
    out += w.empty() ? "∅" : w.str();
    first = false;
  }
  return out + "}";
}

CylinderSet diagonal_image(const PermEndomorphism& rho, const Word& w) {
  const Element projection = Element::monomial(w, w);
  const Element image = rho.apply(projection);
  const int depth = w.size() + rho.rank() - 1;
  std::set<Word> members;
  for (const auto& [t, c] : image.terms()) {
    if (t.alpha != t.beta || c != Scalar(1) || t.alpha.size() > depth)
      throw Error(ErrorKind::NotDiagonal, "image of s_w s_w^* for w = " + w.str() + " is " + to_string(image));
    const int extra = depth - t.alpha.size();
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << extra); ++i) members.insert(t.alpha + Word::from_index(i, extra));
  }
  return CylinderSet(depth, std::move(members));
}

std::string to_string(DiagonalVerdict v) {
  switch (v) {
    case DiagonalVerdict::Automorphism: return "automorphism";
    case DiagonalVerdict::NotAutomorphism: return "not-automorphism";
    case DiagonalVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Number of depth-d cylinders split by some atom, i.e. not a union of atoms.
int deficit(const std::vector<CylinderSet>& atoms, int d) {
  std::set<Word> split;
  for (const auto& atom : atoms) {
    std::set<Word> prefixes;
    for (const auto& w : atom.members()) prefixes.insert(w.prefix(d));
    if (prefixes.size() > 1) split.insert(prefixes.begin(), prefixes.end());
  }
  return static_cast<int>(split.size());
}

}  // namespace

DiagonalReport analyze_diagonal(const PermEndomorphism& rho, int depth_cap) {
  if (depth_cap < 2) throw Error(ErrorKind::BadLevels, "diagonal depth cap must be at least 2");
  if (depth_cap > CylinderSet::max_depth)
    throw Error(ErrorKind::DepthTooLarge, "diagonal depth cap above " + std::to_string(CylinderSet::max_depth));

  DiagonalReport report;
  report.depth_cap = depth_cap;
  report.deficit.assign(static_cast<std::size_t>(depth_cap), std::vector<int>(static_cast<std::size_t>(depth_cap), -1));
  for (int m = 1; m <= depth_cap; ++m) {
    std::vector<CylinderSet> atoms;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i) atoms.push_back(diagonal_image(rho, Word::from_index(i, m)));
    for (int d = 1; d <= m; ++d)
      report.deficit[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(m - 1)] = deficit(atoms, d);
  }
  auto at = [&](int d, int m) { return report.deficit[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(m - 1)]; };

  // The lag is read off at depth 1 and must then work at every depth that
  // still fits under the cap.
  std::optional<int> lag;
  for (int m = 1; m <= depth_cap && !lag; ++m)
    if (at(1, m) == 0) lag = m - 1;
  if (lag && depth_cap - *lag >= 2) {
    bool all = true;
    for (int d = 1; d + *lag <= depth_cap; ++d) all = all && at(d, d + *lag) == 0;
    if (all) {
      report.verdict = DiagonalVerdict::Automorphism;
      report.lag = lag;
      return report;
    }
  }
  for (int d = 1; d < depth_cap; ++d) {
    const int last = at(d, depth_cap);
    if (last > 0 && at(d, depth_cap - 1) == last) {
      report.verdict = DiagonalVerdict::NotAutomorphism;
      return report;
    }
  }
  report.verdict = DiagonalVerdict::Inconclusive;
  return report;
}

std::optional<bool> is_diagonal_automorphism(const PermEndomorphism& rho, int depth_cap) {
  switch (analyze_diagonal(rho, depth_cap).verdict) {
    case DiagonalVerdict::Automorphism: return true;
    case DiagonalVerdict::NotAutomorphism: return false;
    case DiagonalVerdict::Inconclusive: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace cuntz
