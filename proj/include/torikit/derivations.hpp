#pragma once

// Homogeneous locally nilpotent derivations of Q[σ∨_M].
//
// For an extremal ray ρ of σ and a root e (e ∉ σ∨_M while e + m ∈ σ∨_M for
// every m ∈ σ∨_M off the wall τ_M = ρ^perp ∩ σ∨_M) the map
//     chi^m -> <m, ρ> chi^(e+m)
// is a locally nilpotent derivation of degree e. Exponentiating it gives a
// G_a-action normalized by the torus, with character chi^e.

#include <optional>
#include <string>
#include <vector>

#include "torikit/cone.hpp"
#include "torikit/fan.hpp"
#include "torikit/semigroup.hpp"

namespace torikit {

inline constexpr std::size_t kDefaultNilpotencyCap = 10000;

// e ∈ S_ρ. Throws PreconditionError when ρ is not an extremal ray of the
// cone σ dual to s.dual_cone.
bool root_membership(const AffineSemigroup& s, const Ray& rho, const IntVector& e);

struct RootListing {
  std::vector<IntVector> roots;  // box truncation of S_ρ, sorted
  std::optional<std::string> warning;
};

// Every root in [-radius, radius]^n. S_ρ is infinite; an empty result only
// means the box was too small.
RootListing enumerate_roots(const AffineSemigroup& s, const Ray& rho, long radius);

class HomogeneousLND {
 public:
  // Throws PreconditionError unless e ∈ S_ρ.
  HomogeneousLND(AffineSemigroup ambient, Ray rho, IntVector degree);

  const Ray& rho() const { return rho_; }
  const IntVector& degree() const { return degree_; }
  const AffineSemigroup& ambient() const { return ambient_; }
  // <e, ρ>; negative for every root encountered so far.
  Integer degree_pairing() const { return pairing(degree_, rho_.generator()); }

 private:
  AffineSemigroup ambient_;
  Ray rho_;
  IntVector degree_;
};

// Termwise chi^m -> <m, ρ> chi^(e+m). Input and output must be regular
// (IntegrityError otherwise).
AlgebraElement apply(const HomogeneousLND& d, const AlgebraElement& a);

// Smallest k with d^k(chi^m) = 0. Throws NilpotencyCapExceeded past `cap`.
std::size_t nilpotency_order(const HomogeneousLND& d, const IntVector& m,
                             std::size_t cap = kDefaultNilpotencyCap);

// exp(s d)(a) = sum_k s^k/k! d^k(a).
AlgebraElement exponentiate(const HomogeneousLND& d, const Rational& s, const AlgebraElement& a,
                            std::size_t cap = kDefaultNilpotencyCap);

struct GaActionPackage {
  AffineSemigroup ambient;           // σ∨_M for σ the support cone
  Ray chosen_ray;                    // ρ
  std::vector<Ray> boundary_rays;    // the other extremal rays of σ
  IntVector root;                    // e
  std::vector<IntVector> wall_generators;  // Hilbert basis of τ_M
  std::vector<IntVector> shifts;     // m'_1, ..., m'_n
  std::vector<HomogeneousLND> derivations;
  std::vector<IntVector> characters;  // e + m'_i
  std::size_t character_rank = 0;
  Integer character_determinant;
  bool boundary_annihilated = false;
};

// n homogeneous G_a-actions on the quasi-affine toric variety of f with
// linearly independent characters, each fixing the boundary Y \ X.
// Requires f valid, non-torus, with rays spanning N_Q.
GaActionPackage build_ga_actions(const Fan& f);

// p_i ∘ d vanishes on every generator of d.ambient(), for every boundary ray.
bool annihilates_boundary(const HomogeneousLND& d, const std::vector<Ray>& boundary_rays);

}  // namespace torikit
