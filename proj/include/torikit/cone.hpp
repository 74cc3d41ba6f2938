#pragma once

// Rational polyhedral cones in N_Q or M_Q.
//
// A Cone is stored in canonical form and carries both descriptions:
//   V: a lineality basis (saturated, Hermite normal form) plus the extremal
//      rays of the pointed quotient, each lifted orthogonally to the
//      lineality space, made primitive and sorted;
//   H: an equation basis of span(C)^perp (Hermite normal form) plus the
//      facet normals, lifted orthogonally to the equations, primitive, sorted.
// Two cones are equal iff their canonical data are equal, and the dual cone
// is obtained by exchanging the two descriptions.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torikit/lattice.hpp"

namespace torikit {

// Primitive generator of a one-dimensional cone.
class Ray {
 public:
  // Normalizes to the primitive vector; throws InputError on zero.
  explicit Ray(const IntVector& v);

  const IntVector& generator() const { return generator_; }
  std::size_t rank() const { return generator_.rank(); }

  friend bool operator==(const Ray&, const Ray&) = default;
  friend bool operator<(const Ray& a, const Ray& b) { return a.generator_ < b.generator_; }

 private:
  IntVector generator_;
};

class Cone {
 public:
  // The zero cone of rank 0.
  Cone() = default;

  static Cone zero(std::size_t rank);
  static Cone full(std::size_t rank);
  // Cone generated by `generators`; zero vectors are dropped.
  static Cone from_generators(std::size_t rank, std::span<const IntVector> generators);
  // {x : <a, x> >= 0 for a in inequalities, <b, x> = 0 for b in equations}.
  static Cone from_inequalities(std::size_t rank, std::span<const IntVector> inequalities,
                                std::span<const IntVector> equations = {});

  std::size_t ambient_rank() const { return rank_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  const std::vector<IntVector>& facet_normals() const { return facets_; }
  const std::vector<IntVector>& equations() const { return equations_; }

  std::size_t dimension() const { return rank_ - equations_.size(); }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }
  bool is_pointed() const { return lineality_.empty(); }

  // Exact membership from the H-description.
  bool contains(const IntVector& x) const;
  // Rays followed by +-lineality vectors; their conic hull is the cone.
  std::vector<IntVector> generators() const;

  friend bool operator==(const Cone&, const Cone&) = default;
  // Orders by dimension, then rays, then lineality.
  friend bool operator<(const Cone& a, const Cone& b);

  std::string to_string() const;

 private:
  friend Cone dual(const Cone& c);

  std::size_t rank_ = 0;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> equations_;
  std::vector<IntVector> facets_;
};

inline Cone canonicalize(std::size_t rank, std::span<const IntVector> generators) {
  return Cone::from_generators(rank, generators);
}

// {u : <u, v> >= 0 for all v in c}.
Cone dual(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

bool is_strongly_convex(const Cone& c);

// Rays extend to a Z-basis of the ambient lattice. Throws PreconditionError
// when c has a lineality space.
bool is_smooth_cone(const Cone& c);

// Pointed, with extremal rays linearly independent over Q.
bool is_simplex(const Cone& c);

// A normal u in dual(c) with f = c ∩ u^perp, if f is a face of c.
std::optional<IntVector> supporting_normal(const Cone& f, const Cone& c);

bool is_face_of(const Cone& f, const Cone& c);

// rho^perp ∩ dual_cone, with rho in N and dual_cone in M_Q.
Cone orthogonal_face(const Ray& rho, const Cone& dual_cone);

// Every face of c (c included), sorted.
std::vector<Cone> faces(const Cone& c);

}  // namespace torikit
