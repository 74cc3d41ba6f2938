#include <doctest.h>

#include <algorithm>
#include <random>

#include "golden.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"
#include "torikit/derivations.hpp"
#include "torikit/error.hpp"

using namespace torikit;

namespace {

using Gens = std::vector<IntVector>;

AffineSemigroup semigroup_of(std::size_t n, Gens sigma_gens) {
  return hilbert_basis(dual(Cone::from_generators(n, sigma_gens)));
}

AlgebraElement chi(const IntVector& m, const Rational& c = 1) { return AlgebraElement::monomial(m, c); }

const AffineSemigroup& a1() {
  static const AffineSemigroup s = semigroup_of(1, {{1}});
  return s;
}
const AffineSemigroup& a2() {
  static const AffineSemigroup s = semigroup_of(2, {{1, 0}, {0, 1}});
  return s;
}

// t^m for t in (Q*)^n.
Rational weight(const std::vector<Rational>& t, const IntVector& m) {
  Rational w = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const long k = m[i].get_si();
    for (long j = 0; j < std::abs(k); ++j) w = k > 0 ? Rational(w * t[i]) : Rational(w / t[i]);
  }
  return w;
}

AlgebraElement torus_act(const std::vector<Rational>& t, const AlgebraElement& a, bool inverse) {
  AlgebraElement out;
  for (const auto& [m, c] : a.terms()) {
    const Rational w = weight(t, m);
    out.add_term(m, inverse ? Rational(c / w) : Rational(c * w));
  }
  return out;
}

// Root test straight from the definition, over all m in a box rather than
// over Hilbert generators.
bool root_by_definition(const std::vector<oracle::Vec>& sigma_gens, const oracle::Vec& rho, const oracle::Vec& e,
                        long radius) {
  if (oracle::in_dual(sigma_gens, e)) return false;
  for (const auto& m : oracle::box(e.size(), -radius, radius)) {
    if (!oracle::in_dual(sigma_gens, m) || oracle::dot(m, rho) == 0) continue;
    oracle::Vec sum = e;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += m[i];
    if (!oracle::in_dual(sigma_gens, sum)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("derivations") {

TEST_CASE("root membership") {
  CHECK(root_membership(a1(), Ray({1}), {-1}));
  CHECK_FALSE(root_membership(a1(), Ray({1}), {-2}));
  CHECK_FALSE(root_membership(a1(), Ray({1}), {0}));
  CHECK(root_membership(a2(), Ray({1, 0}), {-1, 3}));
  for (long k = 0; k < 6; ++k) CHECK(root_membership(a2(), Ray({1, 0}), {-1, k}));
  CHECK_FALSE(root_membership(a2(), Ray({1, 0}), {-1, -1}));
  CHECK_THROWS_AS(root_membership(a2(), Ray({1, 1}), {-1, 0}), PreconditionError);
}

TEST_CASE("enumerate roots") {
  CHECK(enumerate_roots(a1(), Ray({1}), 5).roots == Gens{{-1}});
  const auto listing = enumerate_roots(a2(), Ray({1, 0}), 2);
  CHECK(listing.roots == Gens{{-1, 0}, {-1, 1}, {-1, 2}});
  CHECK_FALSE(listing.warning);

  const auto torus = hilbert_basis(Cone::full(2));
  CHECK_THROWS_AS(enumerate_roots(torus, Ray({1, 0}), 3), PreconditionError);
  CHECK_THROWS_AS(enumerate_roots(a2(), Ray({1, 0}), 0), InputError);

  // sigma = cone((1,0),(1,5)): roots of the second ray sit far out.
  const auto narrow = semigroup_of(2, {{1, 0}, {1, 5}});
  const auto small = enumerate_roots(narrow, Ray({1, 5}), 1);
  if (small.roots.empty()) CHECK(small.warning);
}

TEST_CASE("roots agree with the definition") {
  std::mt19937_64 rng(61);
  int cases = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<oracle::Vec> gens;
    std::vector<IntVector> ints;
    for (std::size_t i = 0; i < n; ++i) {
      gens.push_back(oracle::random_vec(rng, n, -2, 2));
      ints.push_back(oracle::to_int(gens.back()));
    }
    const Cone sigma = Cone::from_generators(n, ints);
    if (!sigma.is_pointed() || sigma.is_zero()) continue;
    const auto s = hilbert_basis(dual(sigma));
    const Ray rho(sigma.rays()[0]);
    const long radius = n == 3 ? 2 : 3;
    const auto roots = enumerate_roots(s, rho, radius).roots;
    Gens expected;
    for (const auto& e : oracle::box(n, -radius, radius))
      if (root_by_definition(gens, oracle::to_vec(rho.generator()), e, 8)) expected.push_back(oracle::to_int(e));
    std::sort(expected.begin(), expected.end());
    CAPTURE(sigma.to_string());
    CHECK(roots == expected);
    ++cases;
  }
  CHECK(cases > 10);
}

TEST_CASE("apply") {
  const HomogeneousLND d_dx(a1(), Ray({1}), {-1});
  CHECK(apply(d_dx, chi({3})) == chi({2}, 3));
  CHECK(apply(d_dx, chi({0})).is_zero());
  for (long m = 0; m <= 10; ++m) CHECK(apply(d_dx, chi({m})) == (m == 0 ? AlgebraElement() : chi({m - 1}, m)));

  const HomogeneousLND d(a2(), Ray({1, 0}), {-1, 1});
  CHECK(apply(d, chi({2, 0})) == chi({1, 1}, 2));
  CHECK(apply(d, chi({0, 4})).is_zero());
  CHECK_THROWS_AS(apply(d, chi({-1, 0})), IntegrityError);
  CHECK_THROWS_AS(HomogeneousLND(a2(), Ray({1, 0}), {-2, 0}), PreconditionError);
}

TEST_CASE("nilpotency order") {
  const HomogeneousLND d_dx(a1(), Ray({1}), {-1});
  CHECK(nilpotency_order(d_dx, {3}) == 4);
  const HomogeneousLND d(a2(), Ray({1, 0}), {-1, 1});
  CHECK(nilpotency_order(d, {0, 5}) == 1);
  CHECK(nilpotency_order(d, {2, 0}) == 3);
  CHECK_THROWS_AS(nilpotency_order(d, {2, 0}, 2), NilpotencyCapExceeded);
  CHECK_THROWS_AS(nilpotency_order(d, {-1, 0}), PreconditionError);
}

TEST_CASE("exponentiate") {
  const HomogeneousLND d_dx(a1(), Ray({1}), {-1});
  CHECK(exponentiate(d_dx, 1, chi({1})) == chi({1}) + chi({0}));
  const auto cube = chi({3}) + chi({1}, -2);
  CHECK(exponentiate(d_dx, 0, cube) == cube);
  // (x + 1/2)^3 - 2(x + 1/2)
  CHECK(exponentiate(d_dx, Rational(1, 2), cube) ==
        chi({3}) + chi({2}, Rational(3, 2)) + chi({1}, Rational(3, 4) - 2) + chi({0}, Rational(1, 8) - 1));

  const HomogeneousLND d(a2(), Ray({1, 0}), {-1, 1});
  CHECK(exponentiate(d, 2, chi({1, 0})) == chi({1, 0}) + chi({0, 1}, 2));
}

TEST_CASE("derivation properties on random instances") {
  std::mt19937_64 rng(62);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  for (int trial = 0; trial < 120; ++trial) {
    const auto inst = instances::draw(rng);
    const HomogeneousLND d(inst.ambient, inst.rho, inst.root);
    CAPTURE(inst.root.to_string());
    CAPTURE(inst.rho.generator().to_string());

    CHECK(d.degree_pairing() < 0);
    CHECK(apply(d, inst.a * inst.b) == apply(d, inst.a) * inst.b + inst.a * apply(d, inst.b));
    CHECK(apply(d, inst.a + inst.b) == apply(d, inst.a) + apply(d, inst.b));

    for (const auto& m : inst.ambient.monoid_generators()) {
      const AlgebraElement image = apply(d, chi(m));
      for (const auto& [exp, c] : image.terms()) CHECK(exp == inst.root + m);
      CHECK(image.is_regular_in(inst.ambient));
      const Integer p = pairing(m, inst.rho.generator());
      const Integer step = -d.degree_pairing();
      const std::size_t bound = 1 + Integer(p / step).get_ui();
      CHECK(nilpotency_order(d, m, bound) <= bound);
    }

    // t d t^-1 = t^e d, monomial by monomial.
    std::vector<Rational> t;
    for (std::size_t i = 0; i < inst.ambient.rank(); ++i) {
      int a = num(rng);
      t.emplace_back(a == 0 ? 1 : a, den(rng));
      t.back().canonicalize();
    }
    for (const auto& [m, c] : inst.a.terms()) {
      const auto lhs = torus_act(t, apply(d, torus_act(t, chi(m, c), true)), false);
      CHECK(lhs == weight(t, inst.root) * apply(d, chi(m, c)));
    }

    Rational s(num(rng), den(rng)), u(num(rng), den(rng));
    s.canonicalize();
    u.canonicalize();
    const auto exp_s = [&](const AlgebraElement& x) { return exponentiate(d, s, x); };
    CHECK(exp_s(inst.a * inst.b) == exp_s(inst.a) * exp_s(inst.b));
    CHECK(exp_s(exponentiate(d, u, inst.a)) == exponentiate(d, Rational(s + u), inst.a));
    CHECK(exponentiate(d, 0, inst.a) == inst.a);
    CHECK(exponentiate(d, -s, exp_s(inst.b)) == inst.b);
  }
}

TEST_CASE("build_ga_actions on the plane") {
  const auto pkg = build_ga_actions(golden::fan("a2"));
  CHECK(pkg.chosen_ray == Ray({1, 0}));
  CHECK(pkg.root == IntVector{-1, 0});
  CHECK(pkg.boundary_rays == std::vector<Ray>{Ray({0, 1})});
  CHECK(pkg.wall_generators == Gens{{0, 1}});
  CHECK(pkg.shifts == Gens{{0, 2}, {0, 1}});
  CHECK(pkg.characters == Gens{{-1, 2}, {-1, 1}});
  CHECK(pkg.character_rank == 2);
  CHECK(pkg.character_determinant != 0);
  CHECK(pkg.boundary_annihilated);
}

TEST_CASE("build_ga_actions on the punctured plane") {
  const auto pkg = build_ga_actions(golden::fan("a2_minus_origin"));
  CHECK(pkg.chosen_ray == Ray({1, 0}));
  CHECK(pkg.boundary_rays == std::vector<Ray>{Ray({0, 1})});
  for (const auto& d : pkg.derivations)
    for (const auto& m : pkg.ambient.hilbert_basis)
      CHECK(boundary_projection(Ray({0, 1}), pkg.ambient, apply(d, chi(m))).is_zero());
}

TEST_CASE("build_ga_actions on quasi-affine fans") {
  for (const char* name : {"a1", "a2", "a3", "a4", "a2_minus_origin", "a3_minus_line"}) {
    CAPTURE(name);
    const Fan f = golden::fan(name);
    const auto pkg = build_ga_actions(f);
    const std::size_t n = f.ambient_rank();
    CHECK(pkg.derivations.size() == n);
    CHECK(pkg.character_rank == n);
    CHECK(determinant(IntMatrix::from_rows(pkg.characters, n)) == pkg.character_determinant);
    CHECK(pkg.character_determinant != 0);
    CHECK(pkg.boundary_annihilated);
    for (const auto& d : pkg.derivations) {
      CHECK(d.rho() == pkg.chosen_ray);
      CHECK(annihilates_boundary(d, pkg.boundary_rays));
      CHECK(d.degree_pairing() < 0);
      for (const auto& m : pkg.ambient.hilbert_basis) CHECK(nilpotency_order(d, m) >= 1);
    }
  }
}

TEST_CASE("build_ga_actions preconditions") {
  CHECK_THROWS_AS(build_ga_actions(golden::fan("torus2")), PreconditionError);
  CHECK_THROWS_AS(build_ga_actions(Fan()), PreconditionError);
  CHECK_THROWS_AS(build_ga_actions(golden::fan("p1")), PreconditionError);
  CHECK_THROWS_AS(build_ga_actions(golden::fan("a1_times_cstar")), PreconditionError);
  const auto split = split_torus_factor(golden::fan("a1_times_cstar"));
  CHECK(build_ga_actions(split.reduced).character_rank == 1);
}

}  // TEST_SUITE
