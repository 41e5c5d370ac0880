#pragma once

#include "smallq/root_system.hpp"

#include <optional>
#include <string>

namespace smallq {

struct LatticeBasis {
  IntMatrix basis;    // canonical HNF, columns in coweight coordinates
  std::string label;  // "root", "weight", or "subgroup<...>"

  bool operator==(const LatticeBasis& o) const { return basis == o.basis; }
};

inline LatticeBasis make_lattice(const IntMatrix& gens, std::string label) {
  return {lattice_canonical(gens), std::move(label)};
}

// All lattices between the root and weight lattices, one per subgroup of
// pi_1, ordered by index over the root lattice and then by basis bytes.
inline std::vector<LatticeBasis> intermediate_lattices(const RootSystemData& rs) {
  const FiniteAbelianGroup& pi1 = rs.fund_group;
  std::vector<std::vector<std::vector<Int>>> subgroup_gens;
  std::vector<std::vector<Int>> classes = pi1.elements();
  std::size_t m = classes.size();
  // Subgroups as closures of subsets of classes; pi_1 has order <= n+1 but
  // every subgroup of a finite abelian group is generated by <= 2 elements here.
  std::set<std::set<std::vector<Int>>> seen;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      std::set<std::vector<Int>> closure;
      std::vector<std::vector<Int>> frontier = {classes[i], classes[j]};
      closure.insert(pi1.elements()[0]);
      while (!frontier.empty()) {
        std::vector<Int> x = frontier.back();
        frontier.pop_back();
        if (!closure.insert(x).second) continue;
        for (const auto& y : std::vector<std::vector<Int>>(closure.begin(), closure.end())) {
          std::vector<Int> s = pi1.add(x, y);
          if (!closure.count(s)) frontier.push_back(s);
        }
      }
      if (seen.insert(closure).second)
        subgroup_gens.push_back({classes[i], classes[j]});
    }

  std::vector<LatticeBasis> out;
  for (const auto& gens : subgroup_gens) {
    IntMatrix J(rs.rank(), rs.rank() + gens.size());
    for (int r = 0; r < rs.rank(); ++r)
      for (int c = 0; c < rs.rank(); ++c) J(r, c) = rs.a_r(r, c);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::vector<Int> lift = pi1.lift(gens[g]);
      for (int r = 0; r < rs.rank(); ++r) J(r, rs.rank() + g) = lift[r];
    }
    LatticeBasis lb = make_lattice(J, "");
    if (std::none_of(out.begin(), out.end(), [&](const LatticeBasis& x) { return x == lb; }))
      out.push_back(lb);
  }
  std::sort(out.begin(), out.end(), [&](const LatticeBasis& a, const LatticeBasis& b) {
    Int ia = lattice_index(a.basis, rs.a_r), ib = lattice_index(b.basis, rs.a_r);
    if (ia != ib) return ia < ib;
    return a.basis.str() < b.basis.str();
  });
  for (auto& lb : out) {
    if (lb.basis == lattice_canonical(rs.a_r))
      lb.label = "root";
    else if (lb.basis == lattice_canonical(rs.weight_basis))
      lb.label = "weight";
    else {
      // Name the lattice by a fundamental-weight multiple generating it over the root lattice.
      Int idx = lattice_index(lb.basis, rs.a_r);
      std::string tag;
      for (int i = 0; i < rs.rank() && tag.empty(); ++i)
        for (Int c = 1; c <= idx; ++c) {
          std::vector<Int> v = rs.fundamental_weight(i);
          for (auto& x : v) x *= c;
          if (!lattice_contains_vector(rs.a_r, v) && lattice_contains_vector(lb.basis, v)) {
            IntMatrix J(rs.rank(), rs.rank() + 1);
            for (int r = 0; r < rs.rank(); ++r) {
              for (int cc = 0; cc < rs.rank(); ++cc) J(r, cc) = rs.a_r(r, cc);
              J(r, rs.rank()) = v[r];
            }
            if (lattice_canonical(J) == lb.basis) {
              tag = "subgroup<" + (c == 1 ? "" : c.str() + "*") + "w" + std::to_string(i + 1) + ">";
              break;
            }
          }
        }
      lb.label = tag.empty() ? "subgroup" : tag;
    }
  }
  return out;
}

// Cent_{L1}(L2) = L1 cap ell * dual(L2) under the normalized Killing form.
inline LatticeBasis centralizer(const RootSystemData& rs, const LatticeBasis& L1,
                                const LatticeBasis& L2, const Int& ell) {
  RatMatrix d = dual_lattice(L2.basis, rs.gram);
  RatMatrix scaled = Rat(ell) * d;
  IntMatrix meet = lattice_intersection_rational(L1.basis, scaled);
  return {meet, "cent(" + L1.label + ";" + L2.label + ")"};
}

struct LambdaPrimeMismatch {
  IntMatrix cent1, cent2;
};

// The unique admissible kernel: Cent_{root}(L1), provided it agrees with
// Cent_{root}(L2).  Disagreement means the pair (L1, L2) admits no R-matrix.
inline std::optional<LatticeBasis> lambda_prime(const RootSystemData& rs, const LatticeBasis& L1,
                                                const LatticeBasis& L2, const Int& ell,
                                                LambdaPrimeMismatch* why = nullptr) {
  LatticeBasis root{lattice_canonical(rs.a_r), "root"};
  LatticeBasis c1 = centralizer(rs, root, L1, ell);
  LatticeBasis c2 = centralizer(rs, root, L2, ell);
  if (c1.basis != c2.basis) {
    if (why) *why = {c1.basis, c2.basis};
    return std::nullopt;
  }
  c1.label = "kernel";
  return c1;
}

struct CentralizerTransfer {
  RatMatrix map;  // endomorphism in coweight coordinates; maps L into L
  Int ell;
  std::string recipe;
};

namespace detail {

// Part of ell supported on the primes of m.
inline Int m_primary_part(Int ell, const Int& m) {
  Int out = 1;
  Int g = gcd(ell, m);
  while (g > 1) {
    while (ell % g == 0) {
      ell /= g;
      out *= g;
    }
    g = gcd(ell, g);
  }
  return out;
}

inline bool transfer_conditions_hold(const RootSystemData& rs, const RatMatrix& A,
                                     const LatticeBasis& L, const Int& ell) {
  LatticeBasis root{lattice_canonical(rs.a_r), "root"};
  RatMatrix imL = A * to_rational(L.basis);
  RatMatrix imR = A * to_rational(rs.a_r);
  if (!is_integral(imL) || !is_integral(imR)) return false;
  IntMatrix c1 = centralizer(rs, L, root, ell).basis;
  IntMatrix c2 = centralizer(rs, root, L, ell).basis;
  return lattice_equal(to_integral(imL), c1) && lattice_equal(to_integral(imR), c2);
}

// Try A(v_i) -> basis of Cent_root(L), A(gen) -> x * gen on an adapted basis;
// this is the choice behind the closed-form a_g^ell values for the cyclic types.
inline std::optional<RatMatrix> multiplier_recipe(const RootSystemData& rs, const LatticeBasis& L,
                                                  const Int& ell) {
  std::size_t n = L.basis.rows();
  IntMatrix C = to_integral(inverse(L.basis) * to_rational(rs.a_r));
  SmithDecomposition sd = smith_normal_form(C);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (sd.S(i, i) != 1) return std::nullopt;  // quotient L / root not cyclic
  Int N = sd.S(n - 1, n - 1);
  if (N == 1) return std::nullopt;  // L = root lattice
  IntMatrix V = L.basis * sd.P;     // adapted: V cols 0..n-2 in root lattice, N*v_{n-1} too
  Int m = lattice_index(IntMatrix::identity(n), L.basis);  // index of L in the coweight lattice
  Int x = ell / gcd(ell, m);

  LatticeBasis root{lattice_canonical(rs.a_r), "root"};
  IntMatrix c1 = centralizer(rs, L, root, ell).basis;
  IntMatrix c2 = centralizer(rs, root, L, ell).basis;

  std::vector<Int> gen = V.column(n - 1);
  std::vector<Int> xgen(n), Nxgen(n);
  for (std::size_t r = 0; r < n; ++r) {
    xgen[r] = x * gen[r];
    Nxgen[r] = N * xgen[r];
  }
  if (!lattice_contains_vector(c1, xgen) || !lattice_contains_vector(c2, Nxgen))
    return std::nullopt;
  std::vector<Rat> t = solve(c2, Nxgen);
  IntMatrix tcol(n, 1);
  Int tg = 0;
  for (std::size_t r = 0; r < n; ++r) {
    tcol(r, 0) = numerator(t[r]);
    tg = gcd(tg, tcol(r, 0));
  }
  if (tg != 1) return std::nullopt;  // not extendable to a basis of c2
  SmithDecomposition ts = smith_normal_form(tcol);
  // ts.P * e_1 * (+-1) = t; complement = remaining columns of ts.P.
  IntMatrix U(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    U(r, n - 1) = tcol(r, 0);
    for (std::size_t j = 0; j + 1 < n; ++j) U(r, j) = ts.P(r, j + 1);
  }
  if (!is_unimodular(U)) return std::nullopt;
  IntMatrix W = c2 * U;  // columns: w_1..w_{n-1}, N*x*gen
  RatMatrix images(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j + 1 < n; ++j) images(r, j) = Rat(W(r, j));
    images(r, n - 1) = Rat(xgen[r]);
  }
  return images * inverse(V);
}

// Weight-lattice construction through the Smith decomposition of the Cartan
// matrix; valid once ell shares all prime factors of the long root lengths.
inline RatMatrix weight_formula(const RootSystemData& rs, const Int& ell) {
  std::size_t n = rs.d.size();
  std::vector<Rat> acent(n);
  for (std::size_t i = 0; i < n; ++i) acent[i] = Rat(ell / gcd(ell, rs.d[i]));
  SmithDecomposition sc = smith_normal_form(rs.cartan);
  RatMatrix A = to_rational(rs.weight_basis) * RatMatrix::diagonal(acent) *
                to_rational(sc.Q.transpose()) * inverse(sc.P) * inverse(rs.weight_basis);
  return A;
}

// Always-valid fallback: map matched Smith bases of (L / root) onto
// (Cent_L(root) / Cent_root(L)).
inline std::optional<RatMatrix> general_recipe(const RootSystemData& rs, const LatticeBasis& L,
                                               const Int& ell) {
  LatticeBasis root{lattice_canonical(rs.a_r), "root"};
  IntMatrix c1 = centralizer(rs, L, root, ell).basis;
  IntMatrix c2 = centralizer(rs, root, L, ell).basis;
  IntMatrix L1 = to_integral(inverse(L.basis) * to_rational(rs.a_r));
  IntMatrix L2 = to_integral(inverse(c1) * to_rational(c2));
  SmithDecomposition s1 = smith_normal_form(L1);
  SmithDecomposition s2 = smith_normal_form(L2);
  if (s1.diagonal() != s2.diagonal()) return std::nullopt;
  return to_rational(c1) * to_rational(s2.P) * inverse(s1.P) * inverse(L.basis);
}

}  // namespace detail

struct TransferFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline CentralizerTransfer centralizer_transfer(const RootSystemData& rs, const LatticeBasis& L,
                                                const Int& ell) {
  std::size_t n = L.basis.rows();
  Int m = lattice_index(IntMatrix::identity(n), L.basis);
  Int ell2 = detail::m_primary_part(ell, m);
  Int ell1 = ell / ell2;

  auto finish = [&](RatMatrix A, std::string recipe) -> std::optional<CentralizerTransfer> {
    if (ell1 != 1) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) *= Rat(ell1);
    }
    if (!detail::transfer_conditions_hold(rs, A, L, ell)) return std::nullopt;
    return CentralizerTransfer{A, ell, std::move(recipe)};
  };

  if (ell2 == 1) {
    RatMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i) A(i, i) = Rat(ell2);
    if (auto t = finish(A, "scalar")) return *t;
    throw TransferFailure("scalar transfer map failed verification for " + L.label);
  }

  bool is_weight = L.basis == lattice_canonical(rs.weight_basis);
  bool multi_laced = std::any_of(rs.d.begin(), rs.d.end(), [](const Int& x) { return x > 1; });
  if (is_weight && multi_laced) {
    if (auto t = finish(detail::weight_formula(rs, ell2), "weight-smith")) return *t;
  }
  if (auto A = detail::multiplier_recipe(rs, L, ell2)) {
    if (auto t = finish(*A, "multiplier")) return *t;
  }
  if (auto A = detail::general_recipe(rs, L, ell2)) {
    if (auto t = finish(*A, "general")) return *t;
  }
  throw TransferFailure("no centralizer transfer map found for " + L.label + " at ell=" + ell.str());
}

struct LusztigKernelReport {
  bool gcd_condition;   // 2 gcd(ell, d_i^Lambda) == gcd(ell, 2 d_i^W) for all i
  bool lattices_equal;  // kernel == 2 Cent_root(2 weight)
  IntMatrix lusztig_kernel;
};

inline LusztigKernelReport lusztig_kernel_match(const RootSystemData& rs, const LatticeBasis& L,
                                                const Int& ell) {
  std::vector<Int> dl = invariant_factors(L.basis);
  std::vector<Int> dw = invariant_factors(rs.weight_basis);
  bool cond = true;
  for (std::size_t i = 0; i < dl.size(); ++i)
    if (2 * gcd(ell, dl[i]) != gcd(ell, 2 * dw[i])) cond = false;

  RatMatrix dual2w = dual_lattice(Rat(2) * to_rational(rs.weight_basis), rs.gram);
  IntMatrix cent = lattice_intersection_rational(rs.a_r, Rat(ell) * dual2w);
  IntMatrix lusz(cent.rows(), cent.cols());
  for (std::size_t i = 0; i < cent.rows(); ++i)
    for (std::size_t j = 0; j < cent.cols(); ++j) lusz(i, j) = 2 * cent(i, j);
  lusz = lattice_canonical(lusz);

  LatticeBasis kernel = *lambda_prime(rs, L, L, ell);
  return {cond, lattice_equal(lusz, kernel.basis), lusz};
}

}  // namespace smallq
