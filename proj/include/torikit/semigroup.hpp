#pragma once

// The affine semigroup C ∩ M of a rational cone C in M_Q, its Hilbert basis,
// and the monomial algebra Q[C ∩ M] in which exponents are lattice points.

#include <map>
#include <string>
#include <vector>

#include "torikit/cone.hpp"
#include "torikit/lattice.hpp"

namespace torikit {

class Fan;

struct AffineSemigroup {
  Cone dual_cone;
  // Minimal generators of the pointed part, each lifted to the canonical
  // representative modulo the unit lattice; sorted.
  std::vector<IntVector> hilbert_basis;
  // Basis of the unit group (lineality ∩ M); inverses are implied.
  std::vector<IntVector> lineality_units;

  std::size_t rank() const { return dual_cone.ambient_rank(); }
  // All generators as a monoid: hilbert_basis, then +-units.
  std::vector<IntVector> monoid_generators() const;

  friend bool operator==(const AffineSemigroup&, const AffineSemigroup&) = default;
};

// Gordon's lemma made effective: triangulate the pointed part, collect the
// lattice points of every fundamental parallelepiped, keep the irreducibles.
AffineSemigroup hilbert_basis(const Cone& dual_cone);

// m ∈ dual_cone ∩ M, decided by the facet inequalities.
bool contains(const AffineSemigroup& s, const IntVector& m);

// Q[M]-element: finitely many exponents with nonzero rational coefficients.
class AlgebraElement {
 public:
  using Terms = std::map<IntVector, Rational>;

  AlgebraElement() = default;
  static AlgebraElement monomial(const IntVector& exponent, const Rational& coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient of chi^m (zero when absent).
  Rational coefficient(const IntVector& m) const;
  // Adds c * chi^m, dropping the term if it cancels.
  void add_term(const IntVector& m, const Rational& c);

  // Every exponent lies in s.
  bool is_regular_in(const AffineSemigroup& s) const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& scalar);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

// Convolution product, chi^a * chi^b = chi^(a+b).
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// The surjection Q[σ∨_M] -> Q[σ∨_M ∩ ρ_i^perp]: keeps the terms on the wall
// <m, ρ_i> = 0 and kills those with <m, ρ_i> > 0. A term with <m, ρ_i> < 0,
// or any exponent outside s, raises IntegrityError.
AlgebraElement boundary_projection(const Ray& rho_i, const AffineSemigroup& s, const AlgebraElement& a);

// Generators of O(X): the Hilbert basis of the intersection of all σ∨,
// which is the dual of the cone spanned by the rays of the fan.
AffineSemigroup fan_coordinate_semigroup(const Fan& fan);

}  // namespace torikit
