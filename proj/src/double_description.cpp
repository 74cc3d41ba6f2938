#include "double_description.hpp"

#include <algorithm>

#include "torikit/error.hpp"

namespace torikit::detail {

namespace {

struct TrackedRay {
  IntVector v;
  std::vector<bool> tight;  // indexed by inserted constraint
};

bool is_subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

std::vector<bool> intersection(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

}  // namespace

ConeGenerators solve_inequalities(std::size_t rank, std::span<const IntVector> inequalities) {
  std::vector<IntVector> constraints;
  for (const auto& a : inequalities) {
    if (a.rank() != rank) throw DimensionError("inequality of wrong rank");
    if (!a.is_zero()) constraints.push_back(a.primitive());
  }
  sort_unique(constraints);

  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < rank; ++i) lineality.push_back(IntVector::unit(rank, i));
  std::vector<TrackedRay> rays;

  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const IntVector& a = constraints[k];
    for (auto& r : rays) r.tight.push_back(false);

    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&](const IntVector& l) { return pairing(a, l) != 0; });
    if (pivot != lineality.end()) {
      // The constraint cuts the lineality space: l becomes a ray and the
      // remaining lineality and rays are moved into a^perp.
      IntVector l = *pivot;
      lineality.erase(pivot);
      Integer s = pairing(a, l);
      if (s < 0) {
        l = -l;
        s = -s;
      }
      for (auto& x : lineality) x = (s * x - pairing(a, x) * l).primitive();
      for (auto& r : rays) {
        r.v = (s * r.v - pairing(a, r.v) * l).primitive();
        r.tight[k] = true;
      }
      std::vector<bool> tight(k + 1, true);
      tight[k] = false;
      rays.push_back({std::move(l), std::move(tight)});
      continue;
    }

    std::vector<std::size_t> pos, neg;
    std::vector<Integer> value(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = pairing(a, rays[i].v);
      if (value[i] > 0)
        pos.push_back(i);
      else if (value[i] < 0)
        neg.push_back(i);
      else
        rays[i].tight[k] = true;
    }
    if (neg.empty()) continue;

    std::vector<TrackedRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (value[i] >= 0) next.push_back(rays[i]);

    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        const auto common = intersection(rays[p].tight, rays[q].tight);
        // Combinatorial adjacency test.
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (is_subset(common, rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v = (value[p] * rays[q].v - value[q] * rays[p].v).primitive();
        if (v.is_zero()) continue;
        auto tight = common;
        tight[k] = true;
        next.push_back({std::move(v), std::move(tight)});
      }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lineality);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  sort_unique(out.rays);
  return out;
}

}  // namespace torikit::detail
