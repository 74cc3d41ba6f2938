#include <doctest.h>

#include <random>

#include "golden.hpp"
#include "oracles.hpp"
#include "torikit/error.hpp"
#include "torikit/semigroup.hpp"

using namespace torikit;

namespace {

Cone cone(std::size_t rank, std::vector<IntVector> gens) { return Cone::from_generators(rank, gens); }

AlgebraElement chi(const IntVector& m, const Rational& c = 1) { return AlgebraElement::monomial(m, c); }

// Checks generation and minimality of s = hilbert_basis(dual(cone(gens)))
// against the brute-force semigroup, on the box [lo, hi]^n.
void check_against_oracle(const std::vector<oracle::Vec>& sigma_gens, std::size_t n, long lo, long hi) {
  std::vector<IntVector> gens;
  for (const auto& g : sigma_gens) gens.push_back(oracle::to_int(g));
  const AffineSemigroup s = hilbert_basis(dual(Cone::from_generators(n, gens)));
  oracle::DualSemigroup brute(sigma_gens);
  std::vector<oracle::Vec> hb;
  for (const auto& h : s.hilbert_basis) {
    CHECK(brute.contains(oracle::to_vec(h)));
    hb.push_back(oracle::to_vec(h));
  }
  for (const auto& u : s.lineality_units) {
    CHECK(brute.contains(oracle::to_vec(u)));
    CHECK(brute.contains(oracle::to_vec(-u)));
  }
  for (const auto& x : oracle::box(n, lo, hi)) {
    const bool inside = brute.contains(x);
    CHECK(contains(s, oracle::to_int(x)) == inside);
    if (inside) CHECK(brute.generated_by(hb, x));
  }
  for (std::size_t i = 0; i < hb.size(); ++i) {
    std::vector<oracle::Vec> rest = hb;
    rest.erase(rest.begin() + static_cast<long>(i));
    CHECK_FALSE(brute.generated_by(rest, hb[i]));
  }
  if (oracle::rank(sigma_gens, n) == n)
    for (const auto& h : hb) CHECK_FALSE(oracle::decomposable(sigma_gens, h));
}

}  // namespace

TEST_SUITE("semigroup") {

TEST_CASE("hilbert basis examples") {
  const auto orthant = hilbert_basis(cone(2, {{1, 0}, {0, 1}}));
  CHECK(orthant.hilbert_basis == std::vector<IntVector>{{0, 1}, {1, 0}});
  CHECK(orthant.lineality_units.empty());

  const auto a1 = hilbert_basis(cone(2, {{0, 1}, {2, -1}}));
  CHECK(a1.hilbert_basis == std::vector<IntVector>{{0, 1}, {1, 0}, {2, -1}});
  check_against_oracle({{1, 0}, {1, 2}}, 2, -6, 6);

  const auto laurent = hilbert_basis(Cone::full(1));
  CHECK(laurent.hilbert_basis.empty());
  CHECK(laurent.lineality_units == std::vector<IntVector>{{1}});
  CHECK(contains(laurent, {-5}));
}

TEST_CASE("hilbert basis of a cone of higher index") {
  // sigma = cone((1,0),(1,5)): the dual has a long Hilbert basis.
  check_against_oracle({{1, 0}, {1, 5}}, 2, -8, 8);
  check_against_oracle({{1, 0, 0}, {0, 1, 0}, {1, 1, 3}}, 3, -3, 3);
}

TEST_CASE("hilbert basis with units") {
  // sigma = ray e1 in Z^3: O = C[x, y^±1, z^±1].
  const auto s = hilbert_basis(dual(cone(3, {{1, 0, 0}})));
  CHECK(s.hilbert_basis == std::vector<IntVector>{{1, 0, 0}});
  CHECK(s.lineality_units.size() == 2);
  check_against_oracle({{1, 0, 0}}, 3, -3, 3);
  check_against_oracle({{1, 2, 0}, {1, 0, 0}}, 3, -3, 3);
}

TEST_CASE("contains") {
  const auto orthant = hilbert_basis(cone(2, {{1, 0}, {0, 1}}));
  CHECK(contains(orthant, {3, 5}));
  CHECK_FALSE(contains(orthant, {-1, 0}));
  const auto a1 = hilbert_basis(cone(2, {{0, 1}, {2, -1}}));
  CHECK_FALSE(contains(a1, {1, -1}));
  CHECK(pairing({1, -1}, {1, 2}) == -1);
}

TEST_CASE("multiply") {
  CHECK(multiply(chi({1, 0}), chi({0, 1})) == chi({1, 1}));
  CHECK(multiply(chi({1, 0}) + chi({0, 1}), AlgebraElement()).is_zero());
  const auto sum = chi({1, 0}) + chi({0, 1});
  CHECK(multiply(sum, sum) == chi({2, 0}) + chi({1, 1}, 2) + chi({0, 2}));
  CHECK((chi({1, 0}) - chi({1, 0})).is_zero());
  CHECK((chi({1, 1}, 2) + chi({0, 2})).to_string() == "chi^(0,2) + 2*chi^(1,1)");
}

TEST_CASE("boundary projection") {
  const auto orthant = hilbert_basis(cone(2, {{1, 0}, {0, 1}}));
  const Ray e1({1, 0});
  CHECK(boundary_projection(e1, orthant, chi({0, 3})) == chi({0, 3}));
  CHECK(boundary_projection(e1, orthant, chi({2, 1})).is_zero());
  CHECK(boundary_projection(e1, orthant, chi({0, 1}) + chi({1, 1}, 5)) == chi({0, 1}));
  CHECK_THROWS_AS(boundary_projection(e1, orthant, chi({-1, 1})), IntegrityError);
}

TEST_CASE("boundary projection is a ring homomorphism") {
  std::mt19937_64 rng(41);
  const std::vector<std::vector<IntVector>> sigmas{
      {{1, 0}, {0, 1}}, {{1, 0}, {1, 2}}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}};
  for (const auto& gens : sigmas) {
    const std::size_t n = gens[0].rank();
    const Cone sigma = Cone::from_generators(n, gens);
    const auto s = hilbert_basis(dual(sigma));
    std::uniform_int_distribution<std::size_t> pick(0, s.hilbert_basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    auto random_element = [&] {
      AlgebraElement a;
      for (int t = 0; t < 3; ++t) {
        IntVector m(n);
        for (int k = 0; k < 3; ++k) m += s.hilbert_basis[pick(rng)];
        a.add_term(m, coeff(rng));
      }
      return a;
    };
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_element(), b = random_element();
      for (const auto& r : sigma.rays()) {
        const Ray rho(r);
        CHECK(boundary_projection(rho, s, a * b) ==
              boundary_projection(rho, s, a) * boundary_projection(rho, s, b));
        CHECK(boundary_projection(rho, s, a + b) ==
              boundary_projection(rho, s, a) + boundary_projection(rho, s, b));
      }
    }
  }
}

TEST_CASE("random cones agree with the brute-force semigroup") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::uniform_int_distribution<int> count(1, static_cast<int>(n) + 1);
    std::vector<oracle::Vec> gens;
    for (int i = count(rng); i > 0; --i) gens.push_back(oracle::random_vec(rng, n, -3, 3));
    CAPTURE(trial);
    check_against_oracle(gens, n, n == 3 ? -3 : -5, n == 3 ? 3 : 5);
  }
}

TEST_CASE("fan coordinate semigroup") {
  CHECK(fan_coordinate_semigroup(golden::fan("a2")).hilbert_basis == std::vector<IntVector>{{0, 1}, {1, 0}});
  CHECK(fan_coordinate_semigroup(golden::fan("a2_minus_origin")) == fan_coordinate_semigroup(golden::fan("a2")));
  const auto p1 = fan_coordinate_semigroup(golden::fan("p1"));
  CHECK(p1.hilbert_basis.empty());
  CHECK(p1.lineality_units.empty());
}

}  // TEST_SUITE
