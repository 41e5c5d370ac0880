#pragma once

#include "smallq/snf.hpp"

#include <algorithm>
#include <optional>

namespace smallq {

// Lattices are full-rank sublattices of Z^n; a basis matrix holds one
// generator per column.  hnf() is the canonical representative: lower
// triangular, positive diagonal, entries left of the diagonal reduced.
inline IntMatrix hnf(const IntMatrix& gens) {
  std::size_t n = gens.rows(), m = gens.cols();
  IntMatrix A = gens;
  std::size_t t = 0;
  for (std::size_t i = 0; i < n && t < m; ++i) {
    while (true) {
      std::size_t best = m;
      for (std::size_t k = t; k < m; ++k)
        if (A(i, k) != 0 && (best == m || abs_int(A(i, k)) < abs_int(A(i, best)))) best = k;
      if (best == m) break;
      if (best != t) A.swap_cols(best, t);
      bool reduced = true;
      for (std::size_t k = t + 1; k < m; ++k) {
        if (A(i, k) == 0) continue;
        Int q = floor_div(A(i, k), A(i, t));
        for (std::size_t r = 0; r < n; ++r) A(r, k) -= q * A(r, t);
        if (A(i, k) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (t < m && A(i, t) != 0) {
      if (A(i, t) < 0)
        for (std::size_t r = 0; r < n; ++r) A(r, t) = -A(r, t);
      for (std::size_t k = 0; k < t; ++k) {
        Int q = floor_div(A(i, k), A(i, t));
        if (q == 0) continue;
        for (std::size_t r = 0; r < n; ++r) A(r, k) -= q * A(r, t);
      }
      ++t;
    }
  }
  IntMatrix H(n, t);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < t; ++j) H(i, j) = A(i, j);
  return H;
}

inline IntMatrix lattice_canonical(const IntMatrix& gens) {
  IntMatrix H = hnf(gens);
  if (H.cols() != H.rows()) throw std::domain_error("generators do not span a full-rank lattice");
  return H;
}

inline bool lattice_equal(const IntMatrix& B1, const IntMatrix& B2) {
  return lattice_canonical(B1) == lattice_canonical(B2);
}

// Is v in the column lattice of B?
inline bool lattice_contains_vector(const IntMatrix& B, const std::vector<Int>& v) {
  std::vector<Rat> x = solve(B, v);
  return std::all_of(x.begin(), x.end(), [](const Rat& c) { return is_integer(c); });
}

// Is lattice(B2) a sublattice of lattice(B1)?
inline bool lattice_contains(const IntMatrix& B1, const IntMatrix& B2) {
  return is_integral(inverse(B1) * to_rational(B2));
}

// Index [lattice(B1) : lattice(B2)] for nested full-rank lattices.
inline Int lattice_index(const IntMatrix& B1, const IntMatrix& B2) {
  Rat q = determinant(B2) / determinant(B1);
  if (!is_integer(q)) throw std::domain_error("index of non-nested lattices");
  return abs_int(numerator(q));
}

inline IntMatrix lattice_sum(const IntMatrix& B1, const IntMatrix& B2) {
  if (B1.rows() != B2.rows()) throw std::invalid_argument("lattice sum dimension mismatch");
  IntMatrix J(B1.rows(), B1.cols() + B2.cols());
  for (std::size_t i = 0; i < B1.rows(); ++i) {
    for (std::size_t j = 0; j < B1.cols(); ++j) J(i, j) = B1(i, j);
    for (std::size_t j = 0; j < B2.cols(); ++j) J(i, B1.cols() + j) = B2(i, j);
  }
  return lattice_canonical(J);
}

// Intersection via the integer kernel of [B1 | -B2].
inline IntMatrix lattice_intersection(const IntMatrix& B1, const IntMatrix& B2) {
  if (B1.rows() != B2.rows()) throw std::invalid_argument("lattice intersection dimension mismatch");
  std::size_t n = B1.rows(), m1 = B1.cols(), m2 = B2.cols();
  if (m1 != n || m2 != n || determinant(B1) == 0 || determinant(B2) == 0)
    throw std::domain_error("lattice intersection requires full-rank bases");
  IntMatrix J(n, m1 + m2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m1; ++j) J(i, j) = B1(i, j);
    for (std::size_t j = 0; j < m2; ++j) J(i, m1 + j) = -B2(i, j);
  }
  SmithDecomposition d = smith_normal_form(J);
  std::size_t r = d.rank();
  IntMatrix Qinv = to_integral(inverse(d.Q));
  // Kernel basis: columns of Q^{-1} past the rank.
  IntMatrix K(m1, m1 + m2 - r);
  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t j = r; j < m1 + m2; ++j) K(i, j - r) = Qinv(i, j);
  return lattice_canonical(B1 * K);
}

// Basis of the dual lattice w.r.t. a symmetric positive-definite form given
// by `gram` in the ambient coordinates: (dual_i, basis_j) = delta_ij.
inline RatMatrix dual_lattice(const RatMatrix& basis, const RatMatrix& gram) {
  if (determinant(basis) == 0) throw std::domain_error("dual of a singular basis");
  return inverse(gram) * inverse(basis).transpose();
}

inline RatMatrix dual_lattice(const IntMatrix& basis, const RatMatrix& gram) {
  return dual_lattice(to_rational(basis), gram);
}

// Scale a rational basis matrix to a primitive integer one, returning the
// common denominator k with  lattice(B) = (1/k) * lattice(int result).
struct ScaledLattice {
  IntMatrix basis;
  Int denom;
};

inline ScaledLattice clear_denominators(const RatMatrix& B) {
  Int k = 1;
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) k = lcm(k, denominator(B(i, j)));
  IntMatrix out(B.rows(), B.cols());
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) out(i, j) = numerator(B(i, j) * k);
  return {out, k};
}

// Intersection where one side may be a rational lattice; the result must be
// integral (true whenever B1 is integral since the result embeds in it).
inline IntMatrix lattice_intersection_rational(const IntMatrix& B1, const RatMatrix& B2) {
  ScaledLattice s = clear_denominators(B2);
  IntMatrix scaled1 = to_integral(Rat(s.denom) * to_rational(B1));
  IntMatrix meet = lattice_intersection(scaled1, s.basis);
  RatMatrix back = Rat(1, s.denom) * to_rational(meet);
  return lattice_canonical(to_integral(back));
}

// Finite abelian group G = sup / sub presented by invariant factors with
// generator lifts in the ambient coordinates.  Trivial factors are dropped.
struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;  // d_1 | d_2 | ...
  IntMatrix generators;                // one lift per column, ambient coords
  IntMatrix sup_basis, sub_basis;
  RatMatrix coord;                     // class coords of v: (coord * v) mod factors
  std::vector<std::size_t> keep;       // positions of nontrivial factors in the SNF

  Int order() const {
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
  }

  std::size_t ngens() const { return invariant_factors.size(); }

  bool is_trivial() const { return invariant_factors.empty(); }

  // Canonical class coordinates of an ambient vector lying in sup.
  std::vector<Int> coords(const std::vector<Int>& v) const {
    std::vector<Rat> full = coord * v;
    std::vector<Int> out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      const Rat& c = full[keep[i]];
      if (!is_integer(c)) throw std::domain_error("vector not in the covering lattice");
      out[i] = mod_positive(numerator(c), invariant_factors[i]);
    }
    // Confirm membership (dropped factor-1 coordinates must still be integral).
    for (const Rat& c : full)
      if (!is_integer(c)) throw std::domain_error("vector not in the covering lattice");
    return out;
  }

  std::vector<Int> lift(const std::vector<Int>& cls) const {
    std::vector<Int> v(generators.rows(), Int(0));
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t r = 0; r < generators.rows(); ++r) v[r] += cls[i] * generators(r, i);
    return v;
  }

  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod_positive(a[i] + b[i], invariant_factors[i]);
    return c;
  }

  std::vector<Int> neg(const std::vector<Int>& a) const {
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod_positive(-a[i], invariant_factors[i]);
    return c;
  }

  // Enumerate all classes in mixed-radix order (order() must be small).
  std::vector<std::vector<Int>> elements() const {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(ngens(), Int(0));
    while (true) {
      out.push_back(cur);
      std::size_t i = 0;
      for (; i < ngens(); ++i) {
        if (++cur[i] < invariant_factors[i]) break;
        cur[i] = 0;
      }
      if (i == ngens()) break;
    }
    if (ngens() == 0) out.assign(1, {});
    return out;
  }
};

// G = lattice(B_sup) / lattice(B_sub); requires the containment to hold.
inline FiniteAbelianGroup quotient_group(const IntMatrix& B_sub, const IntMatrix& B_sup) {
  RatMatrix Crat = inverse(B_sup) * to_rational(B_sub);
  if (!is_integral(Crat)) throw std::domain_error("quotient_group: not a sublattice");
  IntMatrix C = to_integral(Crat);
  SmithDecomposition d = smith_normal_form(C);
  if (d.rank() != C.rows()) throw std::domain_error("quotient_group: infinite quotient");
  FiniteAbelianGroup g;
  g.sup_basis = lattice_canonical(B_sup);
  g.sub_basis = lattice_canonical(B_sub);
  IntMatrix full_gens = B_sup * d.P;
  g.coord = inverse(d.P) * inverse(B_sup);
  for (std::size_t i = 0; i < C.rows(); ++i)
    if (d.S(i, i) != 1) {
      g.keep.push_back(i);
      g.invariant_factors.push_back(d.S(i, i));
    }
  g.generators = IntMatrix(B_sup.rows(), g.keep.size());
  for (std::size_t j = 0; j < g.keep.size(); ++j)
    g.generators.set_column(j, full_gens.column(g.keep[j]));
  return g;
}

inline bool same_invariant_factors(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  return a.invariant_factors == b.invariant_factors;
}

}  // namespace smallq
