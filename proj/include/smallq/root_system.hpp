#pragma once

#include "smallq/lattice.hpp"

#include <map>
#include <set>
#include <string>

namespace smallq {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Family family;
  int rank;

  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

  static bool valid(Family f, int n) {
    switch (f) {
      case Family::A: return n >= 1;
      case Family::B: return n >= 2;
      case Family::C: return n >= 3;
      case Family::D: return n >= 4;
      case Family::E: return n >= 6 && n <= 8;
      case Family::F: return n == 4;
      case Family::G: return n == 2;
    }
    return false;
  }
};

struct PositiveRoot {
  std::vector<Int> simple_coords;  // coefficients over the simple roots
  std::vector<Int> coweight;       // the same root in coweight coordinates
  Int d;                           // (alpha, alpha) / 2
};

// Static data for one simple type, in the fixed coordinate system of the
// fundamental coweights: (alpha_i, lambda_j^vee) = delta_ij, so the simple
// roots are the columns of A_R and the Gram matrix of the basis is A_R^{-1}.
struct RootSystemData {
  LieType lie_type;
  std::vector<Int> d;          // root length halves, Bourbaki numbering
  IntMatrix cartan;            // C_ij = 2 (a_i, a_j) / (a_i, a_i)
  IntMatrix a_r;               // (A_R)_ij = (alpha_i, alpha_j); basis of the root lattice
  IntMatrix weight_basis;      // Diag(d_i); basis of the weight lattice
  RatMatrix gram;              // A_R^{-1}
  std::vector<PositiveRoot> positive_roots;
  std::vector<Int> rho;        // Weyl vector, coweight coordinates
  FiniteAbelianGroup fund_group;  // pi_1 = weight / root lattice
  std::size_t pi1_generator_node = 0;  // lambda_k whose class generates pi_1 (cyclic case)

  int rank() const { return lie_type.rank; }

  std::vector<Int> fundamental_weight(std::size_t i) const {
    std::vector<Int> v(d.size(), Int(0));
    v[i] = d[i];
    return v;
  }

  Rat killing(const std::vector<Int>& u, const std::vector<Int>& v) const {
    if (u.size() != d.size() || v.size() != d.size())
      throw std::invalid_argument("killing form dimension mismatch");
    std::vector<Rat> gv(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) gv[i] += gram(i, j) * Rat(v[j]);
    Rat s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += Rat(u[i]) * gv[i];
    return s;
  }
};

namespace detail {

inline void add_edge(IntMatrix& ar, const std::vector<Int>& d, std::size_t i, std::size_t j) {
  // (alpha_i, alpha_j) = -max(d_i, d_j) for adjacent nodes of a Dynkin diagram.
  Int v = -std::max(d[i], d[j]);
  ar(i, j) = v;
  ar(j, i) = v;
}

inline std::vector<Int> lengths(const LieType& t) {
  int n = t.rank;
  std::vector<Int> d(n, Int(1));
  switch (t.family) {
    case Family::B:
      for (int i = 0; i < n - 1; ++i) d[i] = 2;
      break;
    case Family::C:
      d[n - 1] = 2;
      break;
    case Family::F:
      d[0] = d[1] = 2;
      break;
    case Family::G:
      d[1] = 3;
      break;
    default: break;
  }
  return d;
}

inline std::vector<std::pair<int, int>> edges(const LieType& t) {
  int n = t.rank;
  std::vector<std::pair<int, int>> e;
  if (t.family == Family::D) {
    for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
    e.push_back({n - 3, n - 1});
  } else if (t.family == Family::E) {
    e = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
    for (int i = 4; i + 1 < n; ++i) e.push_back({i, i + 1});
  } else {
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  }
  return e;
}

}  // namespace detail

inline RootSystemData build_root_system(const LieType& t) {
  if (!LieType::valid(t.family, t.rank))
    throw std::invalid_argument("invalid rank for family " + t.name());
  RootSystemData rs;
  rs.lie_type = t;
  int n = t.rank;
  rs.d = detail::lengths(t);
  rs.a_r = IntMatrix(n, n);
  for (int i = 0; i < n; ++i) rs.a_r(i, i) = 2 * rs.d[i];
  if (t.family == Family::G) {
    rs.a_r(0, 1) = rs.a_r(1, 0) = -3;
  } else {
    for (auto [i, j] : detail::edges(t)) detail::add_edge(rs.a_r, rs.d, i, j);
  }
  rs.cartan = IntMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat c = Rat(rs.a_r(i, j)) / Rat(rs.d[i]);
      if (!is_integer(c)) throw std::logic_error("non-integer Cartan entry");
      rs.cartan(i, j) = numerator(c);
    }
  rs.gram = inverse(rs.a_r);
  rs.weight_basis = IntMatrix::diagonal(rs.d);

  // Positive roots: closure of the simple roots under simple reflections.
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(n, Int(0));
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<Int> c = queue.back();
    queue.pop_back();
    std::vector<Int> pair = rs.a_r * c;  // (beta, alpha_i) per i
    for (int i = 0; i < n; ++i) {
      Int coeff = pair[i] / rs.d[i];  // 2 (beta, a_i) / (a_i, a_i)
      std::vector<Int> r = c;
      r[i] -= coeff;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  for (const auto& c : seen) {
    bool pos = true, nonzero = false;
    for (const Int& x : c) {
      if (x < 0) pos = false;
      if (x != 0) nonzero = true;
    }
    if (!pos || !nonzero) continue;
    PositiveRoot r;
    r.simple_coords = c;
    r.coweight = rs.a_r * c;
    Rat norm = 0;
    for (int i = 0; i < n; ++i) norm += Rat(c[i]) * Rat(r.coweight[i]);
    r.d = numerator(norm / 2);
    rs.positive_roots.push_back(r);
  }

  rs.rho = std::vector<Int>(rs.d.begin(), rs.d.end());
  rs.fund_group = quotient_group(rs.a_r, rs.weight_basis);

  // Node whose fundamental weight generates pi_1 when cyclic.
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
      rs.pi1_generator_node = n - 1;
      break;
    case Family::D:
      rs.pi1_generator_node = n - 1;  // a half-spin weight; order 4 for odd rank
      break;
    case Family::E:
      rs.pi1_generator_node = (n == 6) ? 5 : 6;  // lambda_6 resp. lambda_7; trivial for E8
      break;
    default:
      break;  // F4, G2: trivial pi_1
  }
  return rs;
}

inline Rat killing_form(const RootSystemData& rs, const std::vector<Int>& u, const std::vector<Int>& v) {
  return rs.killing(u, v);
}

struct RibbonData {
  std::vector<Int> nu0;         // coweight coordinates
  std::vector<Int> ell_alpha;   // one multiplier per positive root
};

inline RibbonData ribbon_data(const RootSystemData& rs, const Int& ell) {
  if (ell < 2) throw std::invalid_argument("ribbon data needs ell >= 2");
  RibbonData out;
  out.nu0 = std::vector<Int>(rs.rank(), Int(0));
  for (const PositiveRoot& r : rs.positive_roots) {
    Int la = ell / gcd(ell, 2 * r.d);
    out.ell_alpha.push_back(la);
    for (int i = 0; i < rs.rank(); ++i) out.nu0[i] += (la - 1) * r.coweight[i];
  }
  return out;
}

}  // namespace smallq
