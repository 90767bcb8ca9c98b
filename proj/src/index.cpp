#include "cuntz/index.hpp"

#include "cuntz/error.hpp"
#include "cuntz/level_matrix.hpp"

namespace cuntz {

namespace {

constexpr int kXiIterationCap = 8;

std::vector<Element> word_basis(int level) {
  std::vector<Element> out;
  const std::uint64_t n = std::uint64_t{1} << level;
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      out.push_back(Element::monomial(Word::from_index(a, level), Word::from_index(b, level)));
  return out;
}

// Generators of F_2^k as an algebra: the matrix units on each leg.
std::vector<Element> leg_units(int level) {
  std::vector<Element> out;
  for (int leg = 0; leg < level; ++leg)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        TermMap raw;
        for (std::uint64_t g = 0; g < (std::uint64_t{1} << leg); ++g) {
          const Word head = Word::from_index(g, leg);
          raw.emplace(Term{head.append(i), head.append(j)}, Scalar(1));
        }
        out.push_back(Element::canonicalize(raw));
      }
  return out;
}

Subspace solve(int unknown_level, const std::vector<Vector>& columns, std::size_t equations) {
  RowEchelon echelon(columns.size());
  for (std::size_t r = 0; r < equations; ++r) {
    Vector row(columns.size(), Scalar(0));
    bool any = false;
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (!is_zero(columns[c][r])) {
        row[c] = columns[c][r];
        any = true;
      }
    if (any) echelon.add(std::move(row));
  }
  return Subspace::span(unknown_level, echelon.nullspace());
}

}  // namespace

XiCertificate xi_subspace(const PermEndomorphism& rho) {
  if (rho.rank() != 2)
    throw Error(ErrorKind::RankUnsupported, "the Xi route needs a rank-2 unitary, got rank " + std::to_string(rho.rank()));
  const Element& u = rho.unitary();
  const Element u_star = u.adjoint();
  const std::array<Element, 2> s{Element::generator(1), Element::generator(2)};
  const std::array<Element, 2> s_star{s[0].adjoint(), s[1].adjoint()};

  XiCertificate cert;
  Subspace current = Subspace::full(1);
  cert.chain_dims.push_back(static_cast<int>(current.dimension()));
  for (int step = 0; step < kXiIterationCap; ++step) {
    Subspace next(1);
    std::vector<Vector> gens;
    for (const Element& x : current.basis_elements()) {
      const Element middle = u_star * x * u;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) gens.push_back(coordinates(s_star[static_cast<std::size_t>(i)] * middle * s[static_cast<std::size_t>(j)], 1));
    }
    next = Subspace::span(1, gens);
    cert.chain_dims.push_back(static_cast<int>(next.dimension()));
    if (next == current) {
      cert.xi = std::move(next);
      return cert;
    }
    current = std::move(next);
  }
  throw Error(ErrorKind::NoStabilization, "Xi chain did not stabilize for " + rho.perm().cycle_notation());
}

bool xi_square_check(const Subspace& xi) {
  const auto basis = xi.basis_elements();
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (!xi.contains(a * b)) return false;
  return true;
}

bool condition_a(const PermEndomorphism& rho, const Subspace& xi) {
  const auto basis = xi.basis_elements();
  for (const Element& b : word_basis(1)) {
    const Element image = rho.unitary() * b * rho.unitary().adjoint();
    const Scalar omega_b = omega(b);
    for (const Element& a : basis)
      if (omega(a * image) != omega(a) * omega_b) return false;
  }
  return true;
}

bool condition_b(const PermEndomorphism& rho, const Subspace& xi) {
  const int level = std::max(2, rho.rank());
  for (const Element& a : xi.basis_elements()) {
    const Element conj = rho.unitary().adjoint() * a * rho.unitary();
    const LevelMatrix expected = omega(a) * LevelMatrix::identity(1);
    if (expect_onto_level(embed_to_level(conj, level), 1) != expected) return false;
  }
  return true;
}

XiCertificate jones_index_via_xi(const PermEndomorphism& rho) {
  XiCertificate cert = xi_subspace(rho);
  cert.square_closed = xi_square_check(cert.xi);
  cert.condition_a = condition_a(rho, cert.xi);
  cert.condition_b = condition_b(rho, cert.xi);
  if (!cert.square_closed) {
    cert.failing_check = "square_closed";
  } else if (!cert.condition_a) {
    cert.failing_check = "condition_a";
  } else if (!cert.condition_b) {
    cert.failing_check = "condition_b";
  } else {
    const int dim = static_cast<int>(cert.xi.dimension());
    if (dim != 1 && dim != 2 && dim != 4)
      throw Error(ErrorKind::IndexOutOfRange,
                  "dim Xi = " + std::to_string(dim) + " for " + rho.perm().cycle_notation());
    cert.index = dim;
  }
  return cert;
}

Element transfer(const Endomorphism& rho, const Element& x) {
  return rho.unitary() * canonical_shift(x) * rho.unitary().adjoint();
}

Subspace commutant_fixed_points(const Endomorphism& rho, int k) {
  if (k < 1) throw Error(ErrorKind::BadLevels, "commutant level must be at least 1");
  const int level = std::max(k + 1, rho.rank());
  std::vector<Vector> columns;
  for (const Element& e : word_basis(k)) columns.push_back(coordinates(transfer(rho, e) - e, level));
  return solve(k, columns, std::size_t{1} << (2 * level));
}

Subspace permutation_commutant(const Permutation& sigma, int k) {
  if (k < 1) throw Error(ErrorKind::BadLevels, "commutant level must be at least 1");
  const int level = std::max(k + 1, sigma.rank());
  std::vector<Vector> columns;
  for (const Element& e : word_basis(k))
    columns.push_back(coordinates(conjugate(sigma, canonical_shift(e)) - e, level));
  return solve(k, columns, std::size_t{1} << (2 * level));
}

Subspace uhf_commutant(const Endomorphism& rho, int k, int m) {
  if (k < 1 || m < 1) throw Error(ErrorKind::BadLevels, "levels must be at least 1");
  std::vector<Element> images;
  int level = m;
  for (const Element& a : leg_units(k)) {
    images.push_back(rho.apply(a));
    level = std::max(level, images.back().max_word_length());
  }
  const auto unknowns = word_basis(m);
  std::vector<Vector> columns(unknowns.size());
  for (std::size_t c = 0; c < unknowns.size(); ++c)
    for (const Element& image : images) {
      const Vector v = coordinates(unknowns[c] * image - image * unknowns[c], level);
      columns[c].insert(columns[c].end(), v.begin(), v.end());
    }
  return solve(m, columns, columns.front().size());
}

std::optional<Element> non_scalar_element(const Subspace& space) {
  const Subspace scalars = Subspace::span_elements(space.level(), {Element::unit()});
  for (const Element& e : space.basis_elements())
    if (!scalars.contains(e)) return e;
  return std::nullopt;
}

bool commutes_with_image(const Endomorphism& rho, const Element& x) {
  for (int i = 1; i <= 2; ++i)
    if (x * rho.image(i) != rho.image(i) * x) return false;
  return true;
}

}  // namespace cuntz
