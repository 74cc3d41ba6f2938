#include "torikit/cone.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "double_description.hpp"
#include "torikit/error.hpp"

namespace torikit {

namespace {

void check_rank(std::size_t rank, std::span<const IntVector> vectors, const char* what) {
  for (const auto& v : vectors)
    if (v.rank() != rank)
      throw DimensionError(std::string(what) + ": expected rank " + std::to_string(rank) +
                           ", got " + std::to_string(v.rank()));
}

std::vector<IntVector> with_negatives(std::span<const IntVector> vs) {
  std::vector<IntVector> out(vs.begin(), vs.end());
  for (const auto& v : vs) out.push_back(-v);
  return out;
}

std::vector<IntVector> lift_and_sort(const std::vector<IntVector>& vs,
                                     std::span<const IntVector> modulo) {
  std::vector<IntVector> out;
  for (const auto& v : vs) {
    IntVector w = project_orthogonal(v, modulo);
    if (!w.is_zero()) out.push_back(std::move(w));
  }
  sort_unique(out);
  return out;
}

void print_list(std::ostream& os, const std::vector<IntVector>& vs) {
  os << '[';
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << ',';
    os << vs[i].to_string();
  }
  os << ']';
}

}  // namespace

Ray::Ray(const IntVector& v) : generator_(v.primitive()) {
  if (v.is_zero()) throw InputError("a ray needs a nonzero generator");
}

Cone Cone::zero(std::size_t rank) { return from_generators(rank, {}); }

Cone Cone::full(std::size_t rank) { return from_inequalities(rank, {}); }

// Both constructors run the double description twice: once to get the
// other side, once more to get an irredundant description of the input side.
Cone Cone::from_generators(std::size_t rank, std::span<const IntVector> generators) {
  check_rank(rank, generators, "cone generator");
  const auto dual_side = detail::solve_inequalities(rank, generators);
  auto constraints = with_negatives(dual_side.lineality);
  constraints.insert(constraints.end(), dual_side.rays.begin(), dual_side.rays.end());
  const auto primal_side = detail::solve_inequalities(rank, constraints);

  Cone c;
  c.rank_ = rank;
  c.lineality_ = saturated_span(primal_side.lineality, rank);
  c.rays_ = lift_and_sort(primal_side.rays, c.lineality_);
  c.equations_ = saturated_span(dual_side.lineality, rank);
  c.facets_ = lift_and_sort(dual_side.rays, c.equations_);
  return c;
}

Cone Cone::from_inequalities(std::size_t rank, std::span<const IntVector> inequalities,
                             std::span<const IntVector> equations) {
  check_rank(rank, inequalities, "cone inequality");
  check_rank(rank, equations, "cone equation");
  auto constraints = with_negatives(equations);
  constraints.insert(constraints.end(), inequalities.begin(), inequalities.end());
  const auto primal_side = detail::solve_inequalities(rank, constraints);
  auto generators = with_negatives(primal_side.lineality);
  generators.insert(generators.end(), primal_side.rays.begin(), primal_side.rays.end());
  return from_generators(rank, generators);
}

bool Cone::contains(const IntVector& x) const {
  if (x.rank() != rank_) throw DimensionError("cone membership: rank mismatch");
  for (const auto& e : equations_)
    if (pairing(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (pairing(f, x) < 0) return false;
  return true;
}

std::vector<IntVector> Cone::generators() const {
  std::vector<IntVector> out = rays_;
  for (const auto& l : lineality_) {
    out.push_back(l);
    out.push_back(-l);
  }
  return out;
}

bool operator<(const Cone& a, const Cone& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
  if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
  return a.lineality_ < b.lineality_;
}

std::string Cone::to_string() const {
  std::ostringstream os;
  os << "cone";
  print_list(os, rays_);
  if (!lineality_.empty()) {
    os << "+lin";
    print_list(os, lineality_);
  }
  return os.str();
}

Cone dual(const Cone& c) {
  Cone d;
  d.rank_ = c.rank_;
  d.lineality_ = c.equations_;
  d.rays_ = c.facets_;
  d.equations_ = c.lineality_;
  d.facets_ = c.rays_;
  return d;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionError("intersecting cones of different rank");
  std::vector<IntVector> ineqs = a.facet_normals();
  ineqs.insert(ineqs.end(), b.facet_normals().begin(), b.facet_normals().end());
  std::vector<IntVector> eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.ambient_rank(), ineqs, eqs);
}

bool is_strongly_convex(const Cone& c) { return c.is_pointed(); }

bool is_smooth_cone(const Cone& c) {
  if (!c.is_pointed())
    throw PreconditionError("smoothness is only defined for strongly convex cones: " + c.to_string());
  const auto& rays = c.rays();
  if (rays.empty()) return true;
  const auto snf = smith_normal_form(IntMatrix::from_rows(rays, c.ambient_rank()));
  if (snf.rank != rays.size()) return false;
  return std::all_of(snf.diagonal.begin(), snf.diagonal.end(),
                     [](const Integer& d) { return d == 1; });
}

bool is_simplex(const Cone& c) { return c.is_pointed() && rank_of(c.rays()) == c.rays().size(); }

std::optional<IntVector> supporting_normal(const Cone& f, const Cone& c) {
  if (f.ambient_rank() != c.ambient_rank()) throw DimensionError("face test: rank mismatch");
  const auto f_gens = f.generators();
  for (const auto& g : f_gens)
    if (!c.contains(g)) return std::nullopt;

  // The smallest face of c containing f is cut out by the facets vanishing on f.
  IntVector u(c.ambient_rank());
  std::vector<const IntVector*> tight;
  for (const auto& facet : c.facet_normals()) {
    const bool vanishes = std::all_of(f_gens.begin(), f_gens.end(),
                                      [&](const IntVector& g) { return pairing(facet, g) == 0; });
    if (vanishes) {
      tight.push_back(&facet);
      u += facet;
    }
  }
  std::vector<IntVector> face_gens = c.generators();
  std::erase_if(face_gens, [&](const IntVector& g) {
    return std::any_of(tight.begin(), tight.end(),
                       [&](const IntVector* t) { return pairing(*t, g) != 0; });
  });
  if (Cone::from_generators(c.ambient_rank(), face_gens) != f) return std::nullopt;
  return u;
}

bool is_face_of(const Cone& f, const Cone& c) { return supporting_normal(f, c).has_value(); }

Cone orthogonal_face(const Ray& rho, const Cone& dual_cone) {
  if (rho.rank() != dual_cone.ambient_rank()) throw DimensionError("orthogonal_face: rank mismatch");
  std::vector<IntVector> eqs = dual_cone.equations();
  eqs.push_back(rho.generator());
  return Cone::from_inequalities(dual_cone.ambient_rank(), dual_cone.facet_normals(), eqs);
}

std::vector<Cone> faces(const Cone& c) {
  std::set<Cone> seen;
  std::vector<Cone> stack{c};
  while (!stack.empty()) {
    Cone x = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(x).second) continue;
    for (const auto& facet : x.facet_normals()) {
      std::vector<IntVector> gens;
      for (const auto& l : x.lineality()) {
        gens.push_back(l);
        gens.push_back(-l);
      }
      for (const auto& r : x.rays())
        if (pairing(facet, r) == 0) gens.push_back(r);
      Cone face = Cone::from_generators(x.ambient_rank(), gens);
      if (!seen.contains(face)) stack.push_back(std::move(face));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace torikit
