#include "hcanon/liealg.hpp"
#include "hcanon/analyzer.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hcanon;
using namespace hcanon::testing;

namespace {

RatMatrix E(std::size_t n, std::size_t i, std::size_t j) { return RatMatrix::unit(n, i - 1, j - 1); }

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_SUITE("liealg") {

TEST_CASE("bracket examples") {
  CHECK(bracket(E(2, 1, 2), E(2, 2, 1)) == E(2, 1, 1) - E(2, 2, 2));
  Rng rng(5);
  const RatMatrix x = random_rat_matrix(rng, 3, 3);
  CHECK(bracket(x, x).is_zero());
  // [diag(t), E_ij] = (t_i - t_j) E_ij
  const RatVector t = rv({2, -3, 7});
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j) {
      CHECK(bracket(RatMatrix::diagonal(t), E(3, i, j)) == (t[i - 1] - t[j - 1]) * E(3, i, j));
    }
  CHECK_THROWS_AS(bracket(RatMatrix(2, 2), RatMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("stabilizer_subalgebra examples") {
  SUBCASE("v = 0 gives gl(n)") {
    const auto rep = make_rep(RepKind::wedge2, 3);
    CHECK(stabilizer_subalgebra(rep, RepVector(rep)).dim() == 9);
  }
  SUBCASE("e1^k in Sym^k C^2 gives span{E12, E22}") {
    for (std::size_t k = 1; k <= 6; ++k) {
      const auto rep = std::make_shared<const WeightRep>(make_rep(RepKind::sym, 2, k));
      RepVector v(rep);
      v.add_term(*rep->index_of({k, 0}), 1);
      const auto h = stabilizer_subalgebra(*rep, v);
      REQUIRE(h.dim() == 2);
      CHECK(h.basis()[0] == E(2, 1, 2));
      CHECK(h.basis()[1] == E(2, 2, 2));
    }
  }
  SUBCASE("e1^f1 + e2^f2 in wedge^2 C^5 has dimension 25 - 10") {
    const auto rep = std::make_shared<const WeightRep>(make_rep(RepKind::wedge2, 5));
    RepVector v(rep);
    v.add_term(*rep->index_of({0, 2}), 1);
    v.add_term(*rep->index_of({1, 3}), 1);
    CHECK(stabilizer_subalgebra(*rep, v).dim() == 15);
  }
}

TEST_CASE("cartan_intersection examples") {
  CHECK(cartan_intersection(MatrixLieAlgebra::gl(4)).dim() == 4);

  const MatrixLieAlgebra h(2, {E(2, 1, 2), E(2, 2, 2)});
  const auto c = cartan_intersection(h);
  REQUIRE(c.dim() == 1);
  CHECK(c.basis[0] == rv({0, 1}));

  // Secant n = 5: diag(a, b, -a, -b, c).
  const auto p = builtin_secant(5);
  const auto t = cartan_intersection(p.h());
  CHECK(t.dim() == 3);
  CHECK(t.dim() == 5 - p.relations().rank());
  CHECK(t.contains(rv({1, 0, -1, 0, 0})));
  CHECK(t.contains(rv({0, 1, 0, -1, 0})));
  CHECK(t.contains(rv({0, 0, 0, 0, 1})));
  CHECK_FALSE(t.contains(rv({1, 0, 1, 0, 0})));
}

TEST_CASE("is_subalgebra examples") {
  const std::vector<RatMatrix> abelian{E(2, 1, 2)};
  CHECK(is_subalgebra(abelian));
  const std::vector<RatMatrix> open{E(2, 1, 2), E(2, 2, 1)};
  CHECK_FALSE(is_subalgebra(open));
  const std::vector<RatMatrix> sl2{E(2, 1, 2), E(2, 2, 1), E(2, 1, 1) - E(2, 2, 2)};
  CHECK(is_subalgebra(sl2));

  const auto p = builtin_secant(5);
  CHECK(is_subalgebra(p.h().basis()));
  // Direct membership checks for every bracket.
  for (const auto& x : p.h().basis())
    for (const auto& y : p.h().basis()) CHECK(p.h().contains(bracket(x, y)));

  const std::vector<RatMatrix> dependent{E(2, 1, 2), 2 * Rational(1) * E(2, 1, 2)};
  CHECK_THROWS_AS(is_subalgebra(dependent), LinearDependenceError);
  CHECK_THROWS_AS(MatrixLieAlgebra(2, open), NotSubalgebraError);
}

TEST_CASE("property: stabilizers annihilate v, satisfy rank-nullity, contain their Cartan") {
  Rng rng(21);
  const std::vector<std::shared_ptr<const WeightRep>> reps{
      std::make_shared<const WeightRep>(make_rep(RepKind::standard, 3)),
      std::make_shared<const WeightRep>(make_rep(RepKind::dual, 3)),
      std::make_shared<const WeightRep>(make_rep(RepKind::wedge2, 4)),
      std::make_shared<const WeightRep>(make_rep(RepKind::sym, 2, 3)),
      std::make_shared<const WeightRep>(make_rep(RepKind::sym, 3, 2))};
  for (const auto& rep : reps) {
    const std::size_t n = rep->n();
    for (int trial = 0; trial < 15; ++trial) {
      RepVector v(rep);
      for (std::size_t b = 0; b < rep->dim(); ++b) {
        if (uniform(rng, 0, 3) == 0) v.add_term(b, random_rational(rng));
      }
      const auto h = stabilizer_subalgebra(*rep, v);
      for (const auto& x : h.basis()) CHECK(act(*rep, x, v).is_zero());

      RatMatrix action(rep->dim(), n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const RepVector image = act(*rep, RatMatrix::unit(n, i, j), v);
          for (const auto& [b, c] : image.terms()) action(b, i * n + j) = c;
        }
      CHECK(h.dim() == n * n - rank(action));
      CHECK(is_subalgebra(h.basis()));

      for (const auto& d : cartan_intersection(h).basis) CHECK(h.contains(RatMatrix::diagonal(d)));
    }
  }
}

TEST_CASE("property: Jacobi identity") {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 4));
    const RatMatrix x = random_rat_matrix(rng, n, n);
    const RatMatrix y = random_rat_matrix(rng, n, n);
    const RatMatrix z = random_rat_matrix(rng, n, n);
    CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
  }
}

}  // TEST_SUITE
