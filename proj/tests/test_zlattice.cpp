#include "hcanon/zlattice.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hcanon;
using namespace hcanon::testing;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Lattice lattice(std::size_t n, std::vector<IntVector> gens) { return Lattice(n, gens); }

}  // namespace

TEST_SUITE("zlattice") {

TEST_CASE("hnf examples") {
  SUBCASE("identity") {
    const auto r = hnf(IntMatrix::identity(3));
    CHECK(r.h == IntMatrix::identity(3));
    CHECK(r.u == IntMatrix::identity(3));
  }
  SUBCASE("[[2],[3]]") {
    const IntMatrix m{{2}, {3}};
    const auto r = hnf(m);
    CHECK(r.h == IntMatrix{{1}, {0}});
    CHECK(r.u * m == r.h);
    CHECK(is_unimodular(r.u));
  }
  SUBCASE("[[4,2],[2,4]] has pivots (2, 6)") {
    const IntMatrix m{{4, 2}, {2, 4}};
    // Brute-force oracle over small lattice combinations: the first pivot is
    // the least positive first coordinate, the second the least positive
    // second coordinate among vectors with first coordinate 0.
    const auto pts = small_combinations({m.row(0), m.row(1)}, 2, 8);
    Integer p1 = 0, p2 = 0;
    for (const auto& v : pts) {
      if (v[0] > 0 && (p1 == 0 || v[0] < p1)) p1 = v[0];
      if (v[0] == 0 && v[1] > 0 && (p2 == 0 || v[1] < p2)) p2 = v[1];
    }
    CHECK(p1 == 2);
    CHECK(p2 == 6);

    const auto r = hnf(m);
    CHECK(r.h(0, 0) == p1);
    CHECK(r.h(1, 1) == p2);
    CHECK(r.h(1, 0) == 0);
    CHECK(r.h == IntMatrix{{2, 4}, {0, 6}});
    CHECK(r.u * m == r.h);
    CHECK(is_unimodular(r.u));
  }
}

TEST_CASE("snf examples") {
  SUBCASE("diag(2,3) -> diag(1,6)") {
    const IntMatrix m{{2, 0}, {0, 3}};
    const auto r = snf(m);
    CHECK(r.d == IntMatrix{{1, 0}, {0, 6}});
    CHECK(r.u * m * r.v == r.d);
  }
  SUBCASE("zero matrix") {
    const auto r = snf(IntMatrix(2, 3));
    CHECK(r.d == IntMatrix(2, 3));
  }
  SUBCASE("[[k, 0]]") {
    for (long k = 1; k <= 6; ++k) {
      const IntMatrix m{{k, 0}};
      const auto r = snf(m);
      CHECK(r.d == IntMatrix{{k, 0}});
      CHECK(r.u * m * r.v == r.d);
    }
  }
}

TEST_CASE("quotient examples") {
  SUBCASE("trivial lattice") {
    const auto q = quotient(Lattice(2));
    CHECK(q.invariant_factors().empty());
    CHECK(q.free_rank() == 2);
  }
  SUBCASE("span{(k,0)} -> Z/k + Z") {
    for (long k = 2; k <= 8; ++k) {
      const auto q = quotient(lattice(2, {iv({k, 0})}));
      CHECK(q.invariant_factors() == iv({k}));
      CHECK(q.free_rank() == 1);
    }
    const auto q1 = quotient(lattice(2, {iv({1, 0})}));
    CHECK(q1.invariant_factors().empty());
    CHECK(q1.free_rank() == 1);
  }
  SUBCASE("primitive (1,1,1,1,0) gives Z^4") {
    const IntMatrix g{{1, 1, 1, 1, 0}};
    CHECK(snf(g).d == IntMatrix{{1, 0, 0, 0, 0}});
    const auto q = quotient(lattice(5, {iv({1, 1, 1, 1, 0})}));
    CHECK(q.invariant_factors().empty());
    CHECK(q.free_rank() == 4);
    CHECK(q.projection().rows() == 5);
    CHECK(q.projection().cols() == 4);
  }
}

TEST_CASE("reduce examples") {
  SUBCASE("zero") {
    const auto q = quotient(lattice(3, {iv({2, 0, 0})}));
    CHECK(q.is_zero(q.reduce(iv({0, 0, 0}))));
  }
  SUBCASE("4e5 - (e1+e2+e3+e4) ~ 4e5 mod (1,1,1,1,0)") {
    const auto q = quotient(lattice(5, {iv({1, 1, 1, 1, 0})}));
    CHECK(q.reduce(iv({-1, -1, -1, -1, 4})) == q.reduce(iv({0, 0, 0, 0, 4})));
    CHECK_FALSE(q.is_zero(q.reduce(iv({0, 0, 0, 0, 4}))));
  }
  SUBCASE("e2 - e1 mod (3,0)") {
    const auto q = quotient(lattice(2, {iv({3, 0})}));
    const auto c = q.reduce(iv({-1, 1}));
    // Direct modular reduction: first coordinate -1 = 2 mod 3, second free.
    CHECK(c.torsion == iv({2}));
    CHECK(c.free == iv({1}));
    CHECK(q.reduce(iv({2, 1})) == c);
  }
}

TEST_CASE("is_member examples") {
  const auto l1 = lattice(4, {iv({1, 1, 1, 1})});
  CHECK(is_member(l1, iv({0, 0, 0, 0})));
  CHECK(is_member(l1, iv({1, 1, 1, 1})));
  CHECK_FALSE(is_member(l1, iv({2, 2, 2, 1})));

  const auto l2 = lattice(4, {iv({1, 0, 1, 0}), iv({0, 1, 0, 1})});
  const IntVector target = iv({1, 1, 1, 1});
  bool found = false;
  for (const auto& v : small_combinations(l2.generators(), 4, 3)) found = found || v == target;
  CHECK(found);
  CHECK(is_member(l2, target));
  CHECK_FALSE(is_member(l2, iv({1, 1, 1, 0})));
}

TEST_CASE("saturate") {
  const auto s = saturate(lattice(2, {iv({2, 4})}));
  CHECK(s == lattice(2, {iv({1, 2})}));
  const auto t = saturate(lattice(3, {iv({2, 0, 0}), iv({0, 3, 3})}));
  CHECK(t == lattice(3, {iv({1, 0, 0}), iv({0, 1, 1})}));
  CHECK(saturate(Lattice(3)) == Lattice(3));
}

TEST_CASE("solve_multiple examples") {
  SUBCASE("delta = chi = 0") {
    const auto q = quotient(lattice(2, {iv({2, 0})}));
    const auto s = solve_multiple(q, q.zero(), q.zero());
    REQUIRE(s.has_value());
    CHECK(*s == MultipleSolution{0, 1});
  }
  SUBCASE("k = 2 admits m = 1") {
    const auto q = quotient(lattice(2, {iv({2, 0})}));
    const auto s = solve_multiple(q, q.reduce(iv({-1, 1})), q.reduce(iv({1, 1})));
    REQUIRE(s.has_value());
    CHECK(s->m0 == 1);
    CHECK((s->period == 0 || mod_floor(Integer(2), s->period) == 0));
  }
  SUBCASE("k = 3 admits none") {
    const auto q = quotient(lattice(2, {iv({3, 0})}));
    CHECK_FALSE(solve_multiple(q, q.reduce(iv({-1, 1})), q.reduce(iv({1, 1}))).has_value());
  }
  SUBCASE("pure torsion congruence") {
    // Z/12: 8 = m * 6 has no solution; 6 = m * 4 neither; 8 = m * 4 gives m = 2 mod 3.
    const auto q = quotient(lattice(1, {iv({12})}));
    CHECK_FALSE(solve_multiple(q, q.reduce(iv({8})), q.reduce(iv({6}))).has_value());
    CHECK_FALSE(solve_multiple(q, q.reduce(iv({6})), q.reduce(iv({4}))).has_value());
    const auto s = solve_multiple(q, q.reduce(iv({8})), q.reduce(iv({4})));
    REQUIRE(s.has_value());
    CHECK(*s == MultipleSolution{2, 3});
  }
}

TEST_CASE("property: normal form postconditions on random matrices") {
  Rng rng(1);
  for (int trial = 0; trial < 150; ++trial) {
    const auto rows = static_cast<std::size_t>(uniform(rng, 1, 5));
    const auto cols = static_cast<std::size_t>(uniform(rng, 1, 5));
    const IntMatrix m = random_int_matrix(rng, rows, cols, -20, 20);

    const auto h = hnf(m);
    CHECK(h.u * m == h.h);
    CHECK(is_unimodular(h.u));
    CHECK(is_row_hnf(h.h));
    CHECK(hnf(h.h).h == h.h);

    const auto s = snf(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    CHECK(is_diagonal(s.d));
    CHECK(divisibility_chain(s.d));
    // Same row space under a unimodular change of generators: same HNF.
    const IntMatrix w = random_unimodular(rng, rows);
    CHECK(hnf(w * m).h == h.h);
    CHECK(snf(w * m * random_unimodular(rng, cols)).d == s.d);
  }
}

TEST_CASE("property: reduce is constant on cosets and detects membership") {
  Rng rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n)));
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < r; ++i) gens.push_back(random_int_vector(rng, n, -6, 6));
    const Lattice l(n, gens);
    const auto q = quotient(l);

    // Unimodular regeneration gives identical structure and reductions.
    std::vector<IntVector> regen;
    if (!gens.empty()) {
      const IntMatrix w = random_unimodular(rng, gens.size());
      const IntMatrix g2 = w * IntMatrix::from_rows(gens, n);
      for (std::size_t i = 0; i < g2.rows(); ++i) regen.push_back(g2.row(i));
    }
    const auto q2 = quotient(Lattice(n, regen));
    CHECK(q2.invariant_factors() == q.invariant_factors());
    CHECK(q2.free_rank() == q.free_rank());

    for (int s = 0; s < 100; ++s) {
      const IntVector v = random_int_vector(rng, n, -15, 15);
      const CharClass c = q.reduce(v);
      CHECK(q2.reduce(v) == c);
      CHECK(q.reduce(q.lift(c)) == c);
      for (const auto& g : l.generators()) {
        IntVector w = v;
        for (std::size_t j = 0; j < n; ++j) w[j] += g[j];
        CHECK(q.reduce(w) == c);
      }
      CHECK(is_member(l, v) == q.is_zero(c));
    }
    for (const auto& g : l.generators()) CHECK(is_member(l, g));
  }
}

TEST_CASE("property: solve_multiple matches brute force") {
  Rng rng(3);
  int checked = 0;
  while (checked < 150) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n)));
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < r; ++i) gens.push_back(random_int_vector(rng, n, -6, 6));
    const auto q = quotient(Lattice(n, gens));
    const bool small = q.free_rank() <= 2 && std::all_of(q.invariant_factors().begin(), q.invariant_factors().end(),
                                                         [](const Integer& d) { return d <= 12; });
    if (!small) continue;
    // Bias toward solvable instances: delta = m * chi for a random m half the time.
    const CharClass chi = q.reduce(random_int_vector(rng, n, -3, 3));
    const CharClass delta = uniform(rng, 0, 1) ? q.scale(chi, Integer(uniform(rng, -20, 20)))
                                                : q.reduce(random_int_vector(rng, n, -3, 3));
    CHECK(expand_solution(solve_multiple(q, delta, chi), -50, 50) == brute_multiples(q, delta, chi, -50, 50));
    ++checked;
  }
}

}  // TEST_SUITE
