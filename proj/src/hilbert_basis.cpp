#include <algorithm>
#include <map>
#include <set>

#include "torikit/error.hpp"
#include "torikit/semigroup.hpp"

namespace torikit {

namespace {

using Simplex = std::vector<std::size_t>;

// Placing triangulation of a pointed cone: rays are inserted in order and
// each new ray is coned over the boundary facets it can see.
std::vector<Simplex> placing_triangulation(const std::vector<IntVector>& rays) {
  std::vector<Simplex> simplices;
  std::size_t dim = 0;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (simplices.empty()) {
      simplices.push_back({i});
      dim = 1;
      continue;
    }
    const std::size_t new_rank = rank_of(std::span(rays.data(), i + 1));
    if (new_rank > dim) {
      for (auto& s : simplices) s.push_back(i);
      ++dim;
      continue;
    }

    // Facet -> (number of simplices containing it, opposite vertex).
    std::map<Simplex, std::pair<int, std::size_t>> facet_count;
    for (const auto& s : simplices)
      for (std::size_t j = 0; j < s.size(); ++j) {
        Simplex f;
        for (std::size_t t = 0; t < s.size(); ++t)
          if (t != j) f.push_back(s[t]);
        auto [it, inserted] = facet_count.try_emplace(f, 0, s[j]);
        ++it->second.first;
      }

    std::vector<Simplex> added;
    for (const auto& [f, info] : facet_count) {
      if (info.first != 1) continue;
      std::vector<IntVector> span_vectors;
      for (std::size_t idx : f) span_vectors.push_back(rays[idx]);
      // Inner normal of the facet inside the current linear span.
      const IntVector h = project_orthogonal(rays[info.second], span_vectors);
      if (pairing(h, rays[i]) < 0) {
        Simplex s = f;
        s.push_back(i);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    if (added.empty())
      throw IntegrityError("placing triangulation: ray " + rays[i].to_string() +
                           " is not extremal");
    simplices.insert(simplices.end(), added.begin(), added.end());
  }
  return simplices;
}

// Nonzero lattice points of { sum λ_i v_i : 0 <= λ_i < 1 } for independent v_i.
std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& generators) {
  const std::size_t d = generators.size();
  const std::size_t k = generators.front().rank();
  const auto snf = smith_normal_form(IntMatrix::from_rows(generators, k));
  if (snf.rank != d) throw IntegrityError("simplicial cone with dependent generators");

  // x = λ V is integral iff μ = λ L^{-1} has μ_i d_i ∈ Z, so the cosets are
  // indexed by μ_i = j_i / d_i with 0 <= j_i < d_i.
  std::vector<IntVector> points;
  std::vector<Integer> index(d, 0);
  for (;;) {
    std::vector<Rational> lambda(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (index[i] == 0) continue;
      Rational mu(index[i], snf.diagonal[i]);
      mu.canonicalize();
      for (std::size_t c = 0; c < d; ++c) lambda[c] += mu * snf.left(i, c);
    }
    std::vector<Rational> x(k, 0);
    for (std::size_t c = 0; c < d; ++c) {
      Rational frac = lambda[c];
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), frac.get_num_mpz_t(), frac.get_den_mpz_t());
      frac -= fl;
      if (frac == 0) continue;
      for (std::size_t j = 0; j < k; ++j) x[j] += frac * generators[c][j];
    }
    IntVector point(k);
    for (std::size_t j = 0; j < k; ++j) {
      x[j].canonicalize();
      if (x[j].get_den() != 1) throw IntegrityError("parallelepiped point is not integral");
      point[j] = x[j].get_num();
    }
    if (!point.is_zero()) points.push_back(std::move(point));

    std::size_t pos = 0;
    while (pos < d) {
      ++index[pos];
      if (index[pos] < snf.diagonal[pos]) break;
      index[pos] = 0;
      ++pos;
    }
    if (pos == d) break;
  }
  return points;
}

std::vector<IntVector> pointed_hilbert_basis(const Cone& cone) {
  const auto& rays = cone.rays();
  if (rays.empty()) return {};

  std::set<IntVector> candidates;
  for (const auto& simplex : placing_triangulation(rays)) {
    std::vector<IntVector> gens;
    for (std::size_t idx : simplex) gens.push_back(rays[idx]);
    candidates.insert(gens.begin(), gens.end());
    for (auto& p : parallelepiped_points(gens)) candidates.insert(std::move(p));
  }

  // A positive grading on the cone: sum of the facet normals.
  IntVector grading(cone.ambient_rank());
  for (const auto& f : cone.facet_normals()) grading += f;
  std::vector<std::pair<Integer, IntVector>> graded;
  for (const auto& c : candidates) graded.emplace_back(pairing(grading, c), c);
  std::sort(graded.begin(), graded.end());

  // x is reducible iff x - y lies in the cone for some smaller candidate y:
  // the candidates contain every irreducible element.
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < graded.size(); ++i) {
    const auto& x = graded[i].second;
    bool reducible = false;
    for (std::size_t j = 0; j < i && !reducible; ++j) {
      if (graded[j].first >= graded[i].first) break;
      reducible = cone.contains(x - graded[j].second);
    }
    if (!reducible) basis.push_back(x);
  }
  sort_unique(basis);
  return basis;
}

}  // namespace

AffineSemigroup hilbert_basis(const Cone& dual_cone) {
  AffineSemigroup s;
  s.dual_cone = dual_cone;
  s.lineality_units = dual_cone.lineality();
  const std::size_t n = dual_cone.ambient_rank();
  const std::size_t l = s.lineality_units.size();
  if (l == 0) {
    s.hilbert_basis = pointed_hilbert_basis(dual_cone);
    return s;
  }

  // Unimodular change of coordinates x -> xR sending the unit lattice onto
  // the first l coordinates; the rest is the pointed quotient.
  const auto snf = smith_normal_form(IntMatrix::from_rows(s.lineality_units, n));
  const IntMatrix& right = snf.right;
  auto project = [&](const IntVector& x) {
    IntVector y(n - l);
    for (std::size_t j = l; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) y[j - l] += x[i] * right(i, j);
    return y;
  };
  std::vector<IntVector> quotient_rays;
  for (const auto& r : dual_cone.rays()) quotient_rays.push_back(project(r));
  const Cone quotient = Cone::from_generators(n - l, quotient_rays);

  const IntMatrix right_inv = unimodular_inverse(right);
  for (const auto& y : pointed_hilbert_basis(quotient)) {
    IntVector x(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = l; i < n; ++i) x[j] += y[i - l] * right_inv(i, j);
    s.hilbert_basis.push_back(reduce_modulo(std::move(x), s.lineality_units));
  }
  sort_unique(s.hilbert_basis);
  return s;
}

}  // namespace torikit
