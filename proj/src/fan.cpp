#include "torikit/fan.hpp"

#include <algorithm>
#include <set>

#include "torikit/error.hpp"

namespace torikit {

namespace {

bool cone_contains_cone(const Cone& outer, const Cone& inner) {
  const auto gens = inner.generators();
  return std::all_of(gens.begin(), gens.end(), [&](const IntVector& g) { return outer.contains(g); });
}

}  // namespace

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (const auto& c : cones_) {
    const bool covered = std::any_of(cones_.begin(), cones_.end(), [&](const Cone& d) {
      return d != c && cone_contains_cone(d, c);
    });
    if (!covered) out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> Fan::ray_indices(const Cone& c) const {
  std::vector<std::size_t> out;
  for (const auto& r : c.rays()) {
    auto it = std::lower_bound(rays_.begin(), rays_.end(), Ray(r));
    if (it == rays_.end() || it->generator() != r)
      throw IntegrityError("cone ray " + r.to_string() + " is not an edge of the fan");
    out.push_back(static_cast<std::size_t>(it - rays_.begin()));
  }
  return out;
}

Fan validate(std::size_t rank, std::span<const Cone> cones) {
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (cones[i].ambient_rank() != rank)
      throw FanError("cone #" + std::to_string(i) + " has rank " +
                     std::to_string(cones[i].ambient_rank()) + ", expected " + std::to_string(rank));
    if (!is_strongly_convex(cones[i]))
      throw FanError("cone #" + std::to_string(i) + " " + cones[i].to_string() +
                     " is not strongly convex");
  }
  // Checking the listed cones suffices: faces of compatible cones meet in faces.
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      const Cone meet = intersect(cones[i], cones[j]);
      if (!is_face_of(meet, cones[i]) || !is_face_of(meet, cones[j]))
        throw FanError("not a fan: cones #" + std::to_string(i) + " " + cones[i].to_string() +
                       " and #" + std::to_string(j) + " " + cones[j].to_string() +
                       " meet in " + meet.to_string() + ", which is not a common face");
    }

  std::set<Cone> closed{Cone::zero(rank)};
  for (const auto& c : cones)
    for (auto& face : faces(c)) closed.insert(std::move(face));

  Fan f;
  f.rank_ = rank;
  f.cones_.assign(closed.begin(), closed.end());
  f.rays_.clear();
  for (const auto& c : f.cones_)
    if (c.dimension() == 1) f.rays_.emplace_back(c.rays().front());
  std::sort(f.rays_.begin(), f.rays_.end());
  return f;
}

Fan validate(std::size_t rank, std::span<const std::vector<IntVector>> cone_generators) {
  std::vector<Cone> cones;
  cones.reserve(cone_generators.size());
  for (const auto& gens : cone_generators) cones.push_back(Cone::from_generators(rank, gens));
  return validate(rank, cones);
}

SupportCone support_cone(const Fan& f) {
  std::vector<IntVector> gens;
  for (const auto& r : f.rays()) gens.push_back(r.generator());
  SupportCone out{Cone::from_generators(f.ambient_rank(), gens), true};
  out.all_cones_are_faces = std::all_of(f.cones().begin(), f.cones().end(),
                                        [&](const Cone& c) { return is_face_of(c, out.cone); });
  return out;
}

bool is_smooth(const Fan& f) {
  return std::all_of(f.cones().begin(), f.cones().end(), [](const Cone& c) { return is_smooth_cone(c); });
}

// Complete iff there is a full-dimensional cone and every wall of a
// full-dimensional cone is shared by exactly two of them.
bool is_complete(const Fan& f) {
  const std::size_t n = f.ambient_rank();
  if (n == 0) return true;
  std::vector<const Cone*> top;
  for (const auto& c : f.cones())
    if (c.dimension() == n) top.push_back(&c);
  if (top.empty()) return false;
  for (const auto& wall : f.cones()) {
    if (wall.dimension() + 1 != n) continue;
    const auto count = std::count_if(top.begin(), top.end(), [&](const Cone* c) {
      return cone_contains_cone(*c, wall);
    });
    if (count != 0 && count != 2) return false;
  }
  return true;
}

std::int64_t euler_characteristic(const Fan& f) {
  return std::count_if(f.cones().begin(), f.cones().end(),
                       [&](const Cone& c) { return c.dimension() == f.ambient_rank(); });
}

ClassGroup class_group(const Fan& f) {
  std::vector<IntVector> rays;
  for (const auto& r : f.rays()) rays.push_back(r.generator());
  if (rank_of(rays) != f.ambient_rank())
    throw PreconditionError("class_group: the rays do not span N_Q; split off the torus factor first");
  // Row i of the matrix is ρ_i, so u -> A u is the map M -> Z^d.
  const auto snf = smith_normal_form(IntMatrix::from_rows(rays, f.ambient_rank()));
  ClassGroup g;
  g.rank = rays.size() - snf.rank;
  for (const auto& d : snf.diagonal)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

TorusSplit split_torus_factor(const Fan& f) {
  const std::size_t n = f.ambient_rank();
  std::vector<IntVector> rays;
  for (const auto& r : f.rays()) rays.push_back(r.generator());
  TorusSplit out;
  out.sublattice_basis = saturated_span(rays, n);
  const std::size_t r = out.sublattice_basis.size();
  out.k = quotient_rank(n, out.sublattice_basis);

  std::vector<std::vector<IntVector>> reduced;
  for (const auto& c : f.maximal_cones()) {
    std::vector<IntVector> gens;
    for (const auto& v : c.rays()) {
      auto coords = coordinates_in_basis(out.sublattice_basis, v);
      if (!coords) throw IntegrityError("ray " + v.to_string() + " outside its saturated span");
      gens.push_back(std::move(*coords));
    }
    reduced.push_back(std::move(gens));
  }
  out.reduced = validate(r, reduced);
  return out;
}

QuasiAffineVerdict quasi_affine_verdict(const Fan& f) {
  QuasiAffineVerdict v;
  const TorusSplit split = split_torus_factor(f);
  const Fan& reduced = split.reduced;

  for (const auto& c : reduced.cones())
    if (!is_smooth_cone(c)) {
      v.failed_step = 2;
      v.reason = "cone " + c.to_string() + " is not smooth";
      return v;
    }

  const ClassGroup cl = class_group(reduced);
  if (cl.rank != 0 || !cl.torsion.empty()) {
    v.failed_step = 3;
    v.reason = "class group of the reduced fan is nontrivial: rank " + std::to_string(cl.rank);
    if (!cl.torsion.empty()) {
      v.reason += ", torsion";
      for (const auto& t : cl.torsion) v.reason += " Z/" + t.get_str();
    }
    return v;
  }

  const SupportCone support = support_cone(reduced);
  if (!support.all_cones_are_faces) {
    for (const auto& c : reduced.cones())
      if (!is_face_of(c, support.cone)) {
        v.failed_step = 4;
        v.reason = "cone " + c.to_string() + " is not a face of the support cone " +
                   support.cone.to_string();
        return v;
      }
  }

  v.quasi_affine = true;
  v.ambient = fan_coordinate_semigroup(f);
  return v;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FixedPointWitness fixed_point_witness(const Fan& f, std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  FixedPointWitness w;
  w.euler_characteristic = euler_characteristic(f);
  w.applicable = w.euler_characteristic % static_cast<std::int64_t>(p) != 0;
  if (w.applicable)
    for (const auto& c : f.cones())
      if (c.dimension() == f.ambient_rank()) w.witnesses.push_back(c);
  return w;
}

DimensionRemark remark_dimension_check(const Fan& f, std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  DimensionRemark r;
  if (euler_characteristic(f) % static_cast<std::int64_t>(p) == 0)
    r.note = "chi divisible by p: the fixed point criterion does not apply";
  return r;
}

FanReport analyze(const Fan& f) {
  FanReport r;
  r.smooth = is_smooth(f);
  r.complete = is_complete(f);
  r.edge_count = f.edge_count();
  r.euler_characteristic = euler_characteristic(f);
  const TorusSplit split = split_torus_factor(f);
  r.torus_factor_k = split.k;
  const ClassGroup cl = class_group(split.reduced);
  r.class_rank = cl.rank;
  r.class_torsion = cl.torsion;
  r.quasi_affine = quasi_affine_verdict(f);
  return r;
}

}  // namespace torikit
