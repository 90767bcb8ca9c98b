#include "cuntz/equivalence.hpp"

#include <numeric>

#include "cuntz/error.hpp"
#include "cuntz/parallel.hpp"

namespace cuntz {

namespace {

int minimal_rank(Permutation p) {
  int rank = p.rank();
  while (p.is_padded()) {
    std::vector<std::uint32_t> lower;
    for (std::size_t i = 0; i < p.size(); i += 2) lower.push_back(p(static_cast<std::uint32_t>(i)) >> 1);
    p = Permutation::from_images(p.rank() - 1, std::move(lower));
    --rank;
  }
  return rank;
}

// Witnesses are reported at rank >= 2 so they read like the rank-2
// permutations they act on (the rank-1 flip is u_(13)(24)).
EquivalenceWitness make_witness(const Permutation& left, const Permutation& right, Permutation v) {
  const int rank = minimal_rank(v);
  while (v.rank() < 2) v = v.pad();
  Element unitary = permutation_unitary(v);
  return {left, right, std::move(v), rank, std::move(unitary)};
}

}  // namespace

std::vector<Permutation> witness_candidates(int rank_bound) {
  if (rank_bound < 1 || rank_bound > 3)
    throw Error(ErrorKind::BadLevels, "witness rank bound must be 1, 2 or 3");
  std::vector<Permutation> out;
  for (int r = 1; r <= rank_bound; ++r)
    for (auto& p : all_permutations(r))
      if (!p.is_padded()) out.push_back(std::move(p));
  return out;
}

std::optional<Permutation> find_conjugating_permutation(const std::array<Element, 2>& from,
                                                        const std::array<Element, 2>& to,
                                                        const std::vector<Permutation>& candidates) {
  for (const auto& v : candidates)
    if (conjugate(v, from[0]) == to[0] && conjugate(v, from[1]) == to[1]) return v;
  return std::nullopt;
}

std::optional<EquivalenceWitness> inner_equivalence_witness(const PermEndomorphism& rho,
                                                            const PermEndomorphism& rho_prime, int rank_bound) {
  const auto v = find_conjugating_permutation({rho.endo().image(1), rho.endo().image(2)},
                                              {rho_prime.endo().image(1), rho_prime.endo().image(2)},
                                              witness_candidates(rank_bound));
  if (!v) return std::nullopt;
  return make_witness(rho.perm(), rho_prime.perm(), *v);
}

std::optional<EquivalenceWitness> inner_witness(const PermEndomorphism& rho, int rank_bound) {
  return inner_equivalence_witness(PermEndomorphism(Permutation::identity(rho.rank())), rho, rank_bound);
}

const std::vector<Permutation>& EquivalencePartition::class_of(const Permutation& p) const {
  for (const auto& c : classes)
    if (std::find(c.begin(), c.end(), p) != c.end()) return c;
  throw Error(ErrorKind::InvalidPermutation, "permutation not in partition: " + p.cycle_notation());
}

EquivalencePartition equivalence_classes(int rank_bound, int jobs) {
  const auto perms = rank2_table_order();
  const auto candidates = witness_candidates(rank_bound);
  std::vector<std::array<Element, 2>> images;
  for (const auto& p : perms) {
    const PermEndomorphism rho(p);
    images.push_back({rho.endo().image(1), rho.endo().image(2)});
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = i + 1; j < perms.size(); ++j) pairs.emplace_back(i, j);
  std::vector<std::optional<Permutation>> found(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t n) {
    found[n] = find_conjugating_permutation(images[pairs[n].first], images[pairs[n].second], candidates);
  });

  std::vector<std::size_t> parent(perms.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  EquivalencePartition out;
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    if (!found[n]) continue;
    const auto [i, j] = pairs[n];
    out.witnesses.push_back(make_witness(perms[i], perms[j], *found[n]));
    parent[root(j)] = root(i);
  }
  std::vector<std::vector<Permutation>> by_root(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) by_root[root(i)].push_back(perms[i]);
  // Ordered by first member, which follows table order since roots are
  // always the earlier index.
  std::vector<std::pair<std::size_t, std::vector<Permutation>>> ordered;
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (!by_root[i].empty()) ordered.emplace_back(i, std::move(by_root[i]));
  std::sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
    auto pos = [&](const Permutation& p) { return std::find(perms.begin(), perms.end(), p) - perms.begin(); };
    return pos(a.second.front()) < pos(b.second.front());
  });
  for (auto& entry : ordered) out.classes.push_back(std::move(entry.second));
  return out;
}

}  // namespace cuntz
