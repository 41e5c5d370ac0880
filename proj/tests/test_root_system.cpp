#include "doctest.h"
#include "smallq/root_system.hpp"

using namespace smallq;

namespace {

const std::vector<LieType> kSweepTypes = {
    {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
    {Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::C, 3},
    {Family::D, 4}, {Family::D, 5}, {Family::E, 6}, {Family::E, 7},
    {Family::E, 8}, {Family::F, 4}, {Family::G, 2}};

std::size_t expected_positive_roots(const LieType& t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

Int expected_pi1_order(const LieType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C:
    case Family::E: return t.rank == 6 ? 3 : (t.rank == 7 ? 2 : (t.rank == 8 ? 1 : 2));
    case Family::D: return 4;
    default: return 1;
  }
}

}  // namespace

TEST_SUITE("root-system") {
  TEST_CASE("A2 basics") {
    RootSystemData rs = build_root_system({Family::A, 2});
    CHECK(rs.cartan == IntMatrix{{2, -1}, {-1, 2}});
    CHECK(rs.d == std::vector<Int>{1, 1});
    CHECK(rs.positive_roots.size() == 3);
    CHECK(rs.fund_group.invariant_factors == std::vector<Int>{3});
  }

  TEST_CASE("A1 basics") {
    RootSystemData rs = build_root_system({Family::A, 1});
    CHECK(rs.cartan == IntMatrix{{2}});
    CHECK(rs.positive_roots.size() == 1);
    CHECK(rs.rho == rs.fundamental_weight(0));
  }

  TEST_CASE("G2 basics") {
    RootSystemData rs = build_root_system({Family::G, 2});
    CHECK(rs.d == std::vector<Int>{1, 3});
    CHECK(rs.positive_roots.size() == 6);
    CHECK(rs.fund_group.is_trivial());
  }

  TEST_CASE("invalid ranks are rejected") {
    CHECK_THROWS_AS(build_root_system({Family::D, 3}), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system({Family::E, 9}), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system({Family::C, 2}), std::invalid_argument);
  }

  TEST_CASE("structure across all sweep types") {
    for (const LieType& t : kSweepTypes) {
      CAPTURE(t.name());
      RootSystemData rs = build_root_system(t);
      int n = t.rank;

      CHECK(rs.positive_roots.size() == expected_positive_roots(t));
      CHECK(rs.a_r == rs.a_r.transpose());
      // positive definite: leading principal minors > 0
      for (int k = 1; k <= n; ++k) {
        IntMatrix mk(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) mk(i, j) = rs.a_r(i, j);
        CHECK(determinant(mk) > 0);
      }
      // A_R = Diag(d) * C
      CHECK(rs.a_r == IntMatrix::diagonal(rs.d) * rs.cartan);

      CHECK(rs.fund_group.order() == expected_pi1_order(t));
      CHECK(rs.fund_group.order() == abs_int(numerator(determinant(rs.cartan))));

      // product of invariant factors of A_R = (prod d_i) * |pi_1|
      Int prod = 1;
      for (const Int& s : invariant_factors(rs.a_r)) prod *= s;
      Int expect = rs.fund_group.order();
      for (const Int& di : rs.d) expect *= di;
      CHECK(prod == expect);

      // 2 rho equals the sum of the positive roots
      std::vector<Int> sum(n, Int(0));
      for (const PositiveRoot& r : rs.positive_roots)
        for (int i = 0; i < n; ++i) sum[i] += r.coweight[i];
      for (int i = 0; i < n; ++i) CHECK(sum[i] == 2 * rs.rho[i]);

      // (alpha_i, lambda_j^vee) = delta_ij
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          std::vector<Int> cw(n, Int(0));
          cw[j] = 1;
          CHECK(rs.killing(rs.a_r.column(i), cw) == Rat(i == j ? 1 : 0));
        }

      // the marked node generates pi_1 for the cyclic types
      if (!rs.fund_group.is_trivial() && rs.fund_group.ngens() == 1) {
        std::vector<Int> cls = rs.fund_group.coords(rs.fundamental_weight(rs.pi1_generator_node));
        Int ordgen = rs.fund_group.invariant_factors[0] / gcd(rs.fund_group.invariant_factors[0], cls[0]);
        CHECK(ordgen == rs.fund_group.order());
      }
    }
  }

  TEST_CASE("killing form anchors fix the node labeling") {
    RootSystemData b2 = build_root_system({Family::B, 2});
    CHECK(b2.killing(b2.a_r.column(0), b2.a_r.column(0)) == 4);  // long first node
    CHECK(b2.killing(b2.a_r.column(1), b2.a_r.column(1)) == 2);  // short last node
    auto lam = [](const RootSystemData& rs, int i) { return rs.fundamental_weight(i); };
    CHECK(b2.killing(lam(b2, 1), lam(b2, 1)) == Rat(2, 2));  // (lambda_n, lambda_n) = n/2

    RootSystemData b3 = build_root_system({Family::B, 3});
    CHECK(b3.killing(lam(b3, 2), lam(b3, 2)) == Rat(3, 2));

    RootSystemData c3 = build_root_system({Family::C, 3});
    CHECK(c3.killing(lam(c3, 2), lam(c3, 2)) == 3);  // (lambda_n, lambda_n) = n

    RootSystemData d4 = build_root_system({Family::D, 4});
    CHECK(d4.killing(lam(d4, 3), lam(d4, 3)) == 1);          // n/2 with 2n = 4
    CHECK(d4.killing(lam(d4, 2), lam(d4, 3)) == Rat(1, 2));  // (n-1)/2

    RootSystemData d5 = build_root_system({Family::D, 5});
    CHECK(d5.killing(lam(d5, 4), lam(d5, 4)) == Rat(5, 4));  // (2n+1)/4

    RootSystemData e6 = build_root_system({Family::E, 6});
    CHECK(e6.killing(lam(e6, 5), lam(e6, 5)) == Rat(4, 3));

    RootSystemData e7 = build_root_system({Family::E, 7});
    CHECK(e7.killing(lam(e7, 6), lam(e7, 6)) == Rat(3, 2));

    RootSystemData a3 = build_root_system({Family::A, 3});
    CHECK(a3.killing(lam(a3, 2), lam(a3, 2)) == Rat(3, 4));  // n/(n+1)
  }

  TEST_CASE("ribbon data") {
    RootSystemData a1 = build_root_system({Family::A, 1});
    RibbonData r3 = ribbon_data(a1, 3);
    CHECK(r3.ell_alpha == std::vector<Int>{3});
    CHECK(r3.nu0 == std::vector<Int>{4});  // 2 alpha in coweight coordinates

    CHECK_THROWS_AS(ribbon_data(a1, 1), std::invalid_argument);

    RootSystemData b2 = build_root_system({Family::B, 2});
    RibbonData r4 = ribbon_data(b2, 4);
    for (std::size_t i = 0; i < b2.positive_roots.size(); ++i) {
      if (b2.positive_roots[i].d == 1)
        CHECK(r4.ell_alpha[i] == 2);
      else
        CHECK(r4.ell_alpha[i] == 1);
    }
    for (const LieType& t : kSweepTypes) {
      RootSystemData rs = build_root_system(t);
      RibbonData r2 = ribbon_data(rs, 2);
      for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
        if (rs.positive_roots[i].d == 1) CHECK(r2.ell_alpha[i] == 1);
    }
  }

  TEST_CASE("nu0 + 2 rho centralizes the root lattice mod ell") {
    for (const LieType& t : kSweepTypes) {
      RootSystemData rs = build_root_system(t);
      for (Int ell = 2; ell <= 24; ++ell) {
        RibbonData rb = ribbon_data(rs, ell);
        std::vector<Int> v(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) v[i] = rb.nu0[i] + 2 * rs.rho[i];
        for (int j = 0; j < rs.rank(); ++j) {
          Rat pr = rs.killing(v, rs.a_r.column(j));
          REQUIRE(is_integer(pr));
          CHECK(numerator(pr) % ell == 0);
        }
      }
    }
  }
}
