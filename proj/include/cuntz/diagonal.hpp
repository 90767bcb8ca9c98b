#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cuntz/endomorphism.hpp"

namespace cuntz {

/// A union of depth-d cylinders [w] of the Cantor set {1,2}^N, i.e. a
/// projection of the diagonal D_2 living at level d.
class CylinderSet {
 public:
  static constexpr int max_depth = 16;

  explicit CylinderSet(int depth, std::set<Word> members = {});

  [[nodiscard]] int depth() const noexcept { return depth_; }
  [[nodiscard]] const std::set<Word>& members() const noexcept { return members_; }
  [[nodiscard]] bool contains(const Word& w) const { return members_.count(w) != 0; }

  /// The same set described at depth + levels.
  [[nodiscard]] CylinderSet refine(int levels = 1) const;

  /// "{11, 21}".
  [[nodiscard]] std::string str() const;

  friend bool operator==(const CylinderSet&, const CylinderSet&) = default;

 private:
  int depth_;
  std::set<Word> members_;
};

/// rho(s_w s_w^*) as a union of cylinders at depth |w| + 1 (for rank-2
/// unitaries; depth |w| + rank - 1 in general). Throws NotDiagonal if the
/// image is not a 0/1 combination of diagonal projections.
CylinderSet diagonal_image(const PermEndomorphism& rho, const Word& w);

enum class DiagonalVerdict { Automorphism, NotAutomorphism, Inconclusive };

std::string to_string(DiagonalVerdict v);

struct DiagonalReport {
  DiagonalVerdict verdict = DiagonalVerdict::Inconclusive;
  int depth_cap = 0;
  /// deficit[d-1][m-1]: number of depth-d cylinders that are not unions of
  /// the atoms rho(s_w s_w^*), |w| = m; -1 where m < d.
  std::vector<std::vector<int>> deficit;
  /// For an automorphism, the lag m - d at which every depth-d cylinder is
  /// first generated (constant across the checked depths).
  std::optional<int> lag;
};

/// Semi-decides whether rho restricts to an automorphism of D_2.
///
/// Automorphism: for every depth d with d + lag <= depth_cap (at least two
/// consecutive depths), every depth-d cylinder lies in the Boolean algebra
/// generated by the images of the depth-(d + lag) cylinders.
/// NotAutomorphism: some depth-d cylinder stays outside the generated algebra
/// with an identical positive deficit at the last two levels m = depth_cap-1,
/// depth_cap. Otherwise Inconclusive. Throws DepthTooLarge above 16.
DiagonalReport analyze_diagonal(const PermEndomorphism& rho, int depth_cap = 6);

/// true / false / nullopt (inconclusive).
std::optional<bool> is_diagonal_automorphism(const PermEndomorphism& rho, int depth_cap = 6);

}  // namespace cuntz
