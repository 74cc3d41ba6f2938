#pragma once

// Fans in N_Q and the fan-level invariants of the toric variety they
// describe: smoothness, completeness, the divisor class group, Euler
// characteristic, the splitting Y = Y' x (C*)^k, and the quasi-affineness
// certificate (smooth, trivial class group, every cone a face of the
// support cone).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torikit/cone.hpp"
#include "torikit/semigroup.hpp"

namespace torikit {

class Fan {
 public:
  // The torus fan {0} in rank 0.
  Fan() : cones_{Cone::zero(0)} {}

  std::size_t ambient_rank() const { return rank_; }
  // Face-closed, sorted by dimension then rays.
  const std::vector<Cone>& cones() const { return cones_; }
  // The one-dimensional cones (edges), sorted.
  const std::vector<Ray>& rays() const { return rays_; }
  std::size_t edge_count() const { return rays_.size(); }
  bool is_torus() const { return rays_.empty(); }

  // Cones that are not a proper face of another cone of the fan.
  std::vector<Cone> maximal_cones() const;
  // Positions in rays() of the rays of c.
  std::vector<std::size_t> ray_indices(const Cone& c) const;

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  friend Fan validate(std::size_t, std::span<const Cone>);

  std::size_t rank_ = 0;
  std::vector<Cone> cones_;
  std::vector<Ray> rays_;
};

// Face-closes the input and checks the fan axioms. Throws FanError naming
// the offending cone (or pair of cones, by input position).
Fan validate(std::size_t rank, std::span<const Cone> cones);
Fan validate(std::size_t rank, std::span<const std::vector<IntVector>> cone_generators);

struct SupportCone {
  Cone cone;                  // spanned by all rays of the fan
  bool all_cones_are_faces;  // every fan cone is a face of `cone`
};

SupportCone support_cone(const Fan& f);

bool is_smooth(const Fan& f);
// Support equals N_Q.
bool is_complete(const Fan& f);

// Number of full-dimensional cones, i.e. of torus fixed points.
std::int64_t euler_characteristic(const Fan& f);

struct ClassGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
  friend bool operator==(const ClassGroup&, const ClassGroup&) = default;
};

// Cokernel of M -> Z^d, u -> (<u, ρ_i>). Requires the rays to span N_Q.
ClassGroup class_group(const Fan& f);

struct TorusSplit {
  Fan reduced;                           // the fan in N' = saturated span of the rays
  std::size_t k = 0;                     // rank N / N'
  std::vector<IntVector> sublattice_basis;  // basis of N' in N, Hermite normal form
};

TorusSplit split_torus_factor(const Fan& f);

struct QuasiAffineVerdict {
  bool quasi_affine = false;
  int failed_step = 0;   // 0 on success, else the first failing pipeline step
  std::string reason;
  // Semigroup of the affine variety Spec Q[σ∨ ∩ M] that X openly immerses into.
  std::optional<AffineSemigroup> ambient;
};

// Pipeline: (1) split off the torus factor, (2) every cone smooth,
// (3) class group of the reduced fan trivial (rank 0, no torsion),
// (4) every cone a face of the support cone. Stops at the first failure.
QuasiAffineVerdict quasi_affine_verdict(const Fan& f);

bool is_prime(std::uint64_t p);

struct FixedPointWitness {
  bool applicable = false;  // p does not divide χ
  std::int64_t euler_characteristic = 0;
  std::vector<Cone> witnesses;  // full-dimensional cones = torus fixed points
};

// Throws InputError if p is not prime.
FixedPointWitness fixed_point_witness(const Fan& f, std::uint64_t p);

struct DimensionRemark {
  bool holds = true;
  std::optional<std::string> note;
};

// A rank-n torus always contains (Z/pZ)^n, so the bound dim X >= n holds
// trivially for toric X; the note flags fans where p | χ.
DimensionRemark remark_dimension_check(const Fan& f, std::uint64_t p);

struct FanReport {
  bool smooth = false;
  bool complete = false;
  std::size_t edge_count = 0;
  std::size_t class_rank = 0;          // of the reduced fan
  std::vector<Integer> class_torsion;  // of the reduced fan
  std::int64_t euler_characteristic = 0;
  std::size_t torus_factor_k = 0;
  QuasiAffineVerdict quasi_affine;
};

FanReport analyze(const Fan& f);

}  // namespace torikit
