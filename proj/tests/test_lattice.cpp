#include "doctest.h"
#include "smallq/lattice.hpp"

#include <random>

using namespace smallq;

namespace {

IntMatrix random_fullrank(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  while (true) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    if (determinant(m) != 0) return m;
  }
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("hnf is canonical under unimodular column changes") {
    IntMatrix b{{2, 1}, {0, 3}};
    IntMatrix c{{3, 2}, {3, 0}};  // same lattice, shuffled generators
    CHECK(lattice_equal(b, c));
    IntMatrix h = lattice_canonical(b);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = i + 1; j < 2; ++j) CHECK(h(i, j) == 0);
  }

  TEST_CASE("intersection of coprime scalings") {
    IntMatrix b1 = IntMatrix::diagonal({2, 2});
    IntMatrix b2 = IntMatrix::diagonal({3, 3});
    CHECK(lattice_equal(lattice_intersection(b1, b2), IntMatrix::diagonal({6, 6})));
    CHECK(lattice_equal(lattice_sum(b1, b2), IntMatrix::identity(2)));
  }

  TEST_CASE("intersection and sum are idempotent") {
    IntMatrix b{{2, 1}, {0, 5}};
    CHECK(lattice_equal(lattice_intersection(b, b), b));
    CHECK(lattice_equal(lattice_sum(b, b), b));
  }

  TEST_CASE("index identity |L1/(L1 cap L2)| = |(L1+L2)/L2| randomized") {
    std::mt19937 rng(42);
    for (int it = 0; it < 120; ++it) {
      IntMatrix b1 = random_fullrank(rng, 3, -4, 4);
      IntMatrix b2 = random_fullrank(rng, 3, -4, 4);
      IntMatrix meet = lattice_intersection(b1, b2);
      IntMatrix join = lattice_sum(b1, b2);
      CHECK(lattice_contains(b1, meet));
      CHECK(lattice_contains(b2, meet));
      CHECK(lattice_contains(join, b1));
      CHECK(lattice_contains(join, b2));
      CHECK(lattice_index(b1, meet) == lattice_index(join, b2));
    }
  }

  TEST_CASE("dual lattice is an involution and reverses inclusions") {
    std::mt19937 rng(7);
    IntMatrix g{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    RatMatrix gram = to_rational(g);
    for (int it = 0; it < 60; ++it) {
      IntMatrix b1 = random_fullrank(rng, 3, -3, 3);
      RatMatrix d1 = dual_lattice(b1, gram);
      RatMatrix dd = dual_lattice(d1, gram);
      ScaledLattice s1 = clear_denominators(dd);
      ScaledLattice s2 = clear_denominators(to_rational(b1));
      Int k = lcm(s1.denom, s2.denom);
      IntMatrix a1 = to_integral(Rat(k) * dd);
      IntMatrix a2 = to_integral(Rat(k) * to_rational(b1));
      CHECK(lattice_equal(a1, a2));

      IntMatrix b2 = b1 * random_fullrank(rng, 3, -2, 2);  // sublattice of b1
      RatMatrix d2 = dual_lattice(b2, gram);
      // b2 inside b1  =>  dual(b1) inside dual(b2)
      ScaledLattice t1 = clear_denominators(d1);
      ScaledLattice t2 = clear_denominators(d2);
      Int kk = lcm(t1.denom, t2.denom);
      CHECK(lattice_contains(to_integral(Rat(kk) * d2), to_integral(Rat(kk) * d1)));
    }
  }

  TEST_CASE("quotient group order equals the index") {
    std::mt19937 rng(99);
    for (int it = 0; it < 120; ++it) {
      IntMatrix sup = random_fullrank(rng, 3, -3, 3);
      IntMatrix mul = random_fullrank(rng, 3, -3, 3);
      IntMatrix sub = sup * mul;
      FiniteAbelianGroup g = quotient_group(sub, sup);
      CHECK(g.order() == abs_int(numerator(determinant(mul))));
      for (std::size_t i = 0; i < g.ngens(); ++i) {
        std::vector<Int> gen = g.generators.column(i);
        std::vector<Int> scaled(gen.size());
        for (std::size_t r = 0; r < gen.size(); ++r) scaled[r] = g.invariant_factors[i] * gen[r];
        CHECK(lattice_contains_vector(sub, scaled));
        CHECK(!lattice_contains_vector(sub, gen));
      }
    }
  }

  TEST_CASE("quotient rejects non-nested lattices") {
    IntMatrix sup = IntMatrix::diagonal({2, 2});
    IntMatrix sub = IntMatrix::identity(2);
    CHECK_THROWS_AS(quotient_group(sub, sup), std::domain_error);
  }

  TEST_CASE("class coordinates round-trip through lifts") {
    IntMatrix sup = IntMatrix::identity(2);
    IntMatrix sub{{2, 0}, {0, 4}};
    FiniteAbelianGroup g = quotient_group(sub, sup);
    CHECK(g.order() == 8);
    for (const auto& cls : g.elements()) {
      std::vector<Int> v = g.lift(cls);
      CHECK(g.coords(v) == cls);
    }
  }
}
