#include "torikit/derivations.hpp"

#include <algorithm>

#include "torikit/error.hpp"

namespace torikit {

namespace {

void require_extremal(const AffineSemigroup& s, const Ray& rho) {
  if (rho.rank() != s.rank()) throw DimensionError("ray and semigroup have different rank");
  const Cone sigma = dual(s.dual_cone);
  if (!sigma.is_pointed() || sigma.rays().empty())
    throw PreconditionError("the cone " + sigma.to_string() + " has no extremal rays");
  if (!std::binary_search(sigma.rays().begin(), sigma.rays().end(), rho.generator()))
    throw PreconditionError("ray " + rho.generator().to_string() + " is not an extremal ray of " +
                            sigma.to_string());
}

// Membership test without the precondition check. Testing e + m for the
// generators m off the wall suffices: any m ∈ σ∨_M \ τ_M is a sum of
// generators with at least one of them off the wall.
bool is_root(const AffineSemigroup& s, const IntVector& rho, const IntVector& e) {
  if (contains(s, e)) return false;
  for (const auto& m : s.hilbert_basis)
    if (pairing(m, rho) > 0 && !contains(s, e + m)) return false;
  return true;
}

}  // namespace

bool root_membership(const AffineSemigroup& s, const Ray& rho, const IntVector& e) {
  require_extremal(s, rho);
  if (e.rank() != s.rank()) throw DimensionError("root candidate of wrong rank");
  return is_root(s, rho.generator(), e);
}

RootListing enumerate_roots(const AffineSemigroup& s, const Ray& rho, long radius) {
  if (radius < 1) throw InputError("root search radius must be at least 1");
  require_extremal(s, rho);
  const std::size_t n = s.rank();
  RootListing out;
  std::vector<long> point(n, -radius);
  for (;;) {
    IntVector e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = point[i];
    if (is_root(s, rho.generator(), e)) out.roots.push_back(std::move(e));
    bool done = true;
    for (std::size_t pos = n; pos-- > 0;) {
      if (++point[pos] <= radius) {
        done = false;
        break;
      }
      point[pos] = -radius;
    }
    if (done) break;
  }
  sort_unique(out.roots);
  if (out.roots.empty())
    out.warning = "no root in [-" + std::to_string(radius) + ", " + std::to_string(radius) +
                  "]^" + std::to_string(n) + "; increase radius";
  return out;
}

HomogeneousLND::HomogeneousLND(AffineSemigroup ambient, Ray rho, IntVector degree)
    : ambient_(std::move(ambient)), rho_(std::move(rho)), degree_(std::move(degree)) {
  if (!root_membership(ambient_, rho_, degree_))
    throw PreconditionError("degree " + degree_.to_string() + " is not a root for the ray " +
                            rho_.generator().to_string());
}

AlgebraElement apply(const HomogeneousLND& d, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [m, c] : a.terms()) {
    if (!contains(d.ambient(), m))
      throw IntegrityError("derivation applied to non-regular exponent " + m.to_string());
    const Integer p = pairing(m, d.rho().generator());
    if (p == 0) continue;
    IntVector image = d.degree() + m;
    if (!contains(d.ambient(), image))
      throw IntegrityError("derivation of degree " + d.degree().to_string() + " sends chi^" +
                           m.to_string() + " outside the semigroup");
    out.add_term(image, c * Rational(p));
  }
  return out;
}

std::size_t nilpotency_order(const HomogeneousLND& d, const IntVector& m, std::size_t cap) {
  if (cap < 1) throw InputError("nilpotency cap must be at least 1");
  if (!contains(d.ambient(), m))
    throw PreconditionError("exponent " + m.to_string() + " is not in the semigroup");
  AlgebraElement a = AlgebraElement::monomial(m);
  std::size_t k = 0;
  while (!a.is_zero()) {
    if (k == cap)
      throw NilpotencyCapExceeded("chi^" + m.to_string() + " not annihilated after " +
                                  std::to_string(cap) + " applications");
    a = apply(d, a);
    ++k;
  }
  return k;
}

AlgebraElement exponentiate(const HomogeneousLND& d, const Rational& s, const AlgebraElement& a,
                            std::size_t cap) {
  AlgebraElement result = a;
  AlgebraElement term = a;
  for (std::size_t k = 1;; ++k) {
    if (k > cap) throw NilpotencyCapExceeded("exponential series did not terminate");
    term = apply(d, term);
    term *= s / Rational(static_cast<unsigned long>(k));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

bool annihilates_boundary(const HomogeneousLND& d, const std::vector<Ray>& boundary_rays) {
  for (const auto& m : d.ambient().monoid_generators()) {
    const AlgebraElement image = apply(d, AlgebraElement::monomial(m));
    for (const auto& rho_i : boundary_rays)
      if (!boundary_projection(rho_i, d.ambient(), image).is_zero()) return false;
  }
  return true;
}

GaActionPackage build_ga_actions(const Fan& f) {
  const std::size_t n = f.ambient_rank();
  if (f.is_torus()) throw PreconditionError("the torus has no homogeneous G_a-actions");
  {
    std::vector<IntVector> rays;
    for (const auto& r : f.rays()) rays.push_back(r.generator());
    if (rank_of(rays) != n)
      throw PreconditionError("the rays do not span N_Q; split off the torus factor first");
  }

  // (1) σ and the openness certificate.
  const SupportCone support = support_cone(f);
  if (!support.all_cones_are_faces)
    throw PreconditionError("input fan is not quasi-affine: some cone is not a face of " +
                            support.cone.to_string());
  const Cone& sigma = support.cone;

  // (2) ρ: the first extremal ray of σ that is an edge of the fan, scanning
  // in decreasing lexicographic order (e_1, e_2, ... for the orthant).
  std::optional<Ray> chosen;
  for (auto it = sigma.rays().rbegin(); it != sigma.rays().rend() && !chosen; ++it)
    if (std::binary_search(f.rays().begin(), f.rays().end(), Ray(*it))) chosen = Ray(*it);
  if (!chosen) throw IntegrityError("no extremal ray of " + sigma.to_string() + " is an edge of the fan");
  std::vector<Ray> boundary;
  for (const auto& r : sigma.rays())
    if (r != chosen->generator()) boundary.emplace_back(r);

  GaActionPackage pkg{hilbert_basis(dual(sigma)), *chosen, boundary, IntVector(n), {}, {}, {}, {},
                      0, Integer(0), false};
  const IntVector& rho = pkg.chosen_ray.generator();

  // (3) a root, by box search with a growing radius.
  std::optional<IntVector> root;
  for (long radius = 3; radius <= 48 && !root; radius *= 2) {
    auto listing = enumerate_roots(pkg.ambient, pkg.chosen_ray, radius);
    if (!listing.roots.empty()) root = listing.roots.front();
  }
  if (!root) throw IntegrityError("no root found within radius 48 for ray " + rho.to_string());
  pkg.root = *root;

  // (4) the wall τ_M and a point b on it, positive on every boundary ray.
  const AffineSemigroup wall = hilbert_basis(orthogonal_face(pkg.chosen_ray, pkg.ambient.dual_cone));
  pkg.wall_generators = wall.hilbert_basis;
  IntVector b(n);
  for (const auto& h : pkg.wall_generators) b += h;
  for (const auto& rho_i : boundary)
    if (pairing(b, rho_i.generator()) <= 0)
      throw IntegrityError("wall sum " + b.to_string() + " is not positive on the boundary ray " +
                           rho_i.generator().to_string());

  // (5) n - 1 independent wall generators.
  std::vector<IntVector> independent;
  for (const auto& h : pkg.wall_generators) {
    if (independent.size() + 1 == n) break;
    independent.push_back(h);
    if (rank_of(independent) != independent.size()) independent.pop_back();
  }
  if (independent.size() + 1 != n)
    throw IntegrityError("the wall spans only " + std::to_string(independent.size()) +
                         " dimensions, expected a hyperplane");
  for (const auto& h : independent) pkg.shifts.push_back(b + h);
  pkg.shifts.push_back(b);

  // (6) derivations, characters and their verification.
  for (const auto& shift : pkg.shifts) {
    IntVector degree = pkg.root + shift;
    if (!root_membership(pkg.ambient, pkg.chosen_ray, degree))
      throw IntegrityError("shifted degree " + degree.to_string() + " left the root set");
    pkg.characters.push_back(degree);
    pkg.derivations.emplace_back(pkg.ambient, pkg.chosen_ray, std::move(degree));
  }
  pkg.character_rank = rank_of(pkg.characters);
  pkg.character_determinant = determinant(IntMatrix::from_rows(pkg.characters, n));
  if (pkg.character_determinant == 0)
    throw IntegrityError("characters are linearly dependent");
  pkg.boundary_annihilated = std::all_of(pkg.derivations.begin(), pkg.derivations.end(),
                                         [&](const HomogeneousLND& d) {
                                           return annihilates_boundary(d, boundary);
                                         });
  if (!pkg.boundary_annihilated)
    throw IntegrityError("a derivation does not fix the boundary divisors");
  return pkg;
}

}  // namespace torikit
