#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rtc/ext_field.hpp"

namespace rtc {

/// Linearised q-polynomial V(Z) = sum v_l Z^(q^l), stored sparsely with
/// nonzero coefficients only; the zero polynomial is the empty map.
struct LinPoly {
  std::map<int, FF> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int q_degree() const;   // throws on zero polynomial
  int min_exponent() const;
  friend bool operator==(const LinPoly&, const LinPoly&) = default;
};

LinPoly lin_identity(const ExtField& F);  // Z
LinPoly lin_monomial(const ExtField& F, int exp, const FF& coeff);
LinPoly lin_add(const ExtField& F, const LinPoly& a, const LinPoly& b);
LinPoly lin_compose(const ExtField& F, const LinPoly& a, const LinPoly& b);  // a(b(Z))
FF lin_eval(const ExtField& F, const LinPoly& V, const FF& x);

using MultiExp = std::vector<int>;

/// Multilinearised q-polynomial of order m >= 1 over GF(q^n), sparse support
/// in N_0^m. Map keys iterate in ascending lexicographic order, which makes
/// every traversal in this module deterministic.
struct MultilinPoly {
  int m = 1;
  std::map<MultiExp, FF> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int partial_q_degree(int j) const;  // throws on zero polynomial
  int max_partial_q_degree() const;
  std::set<MultiExp> support() const;
  friend bool operator==(const MultilinPoly&, const MultilinPoly&) = default;
};

MultilinPoly ml_zero(int m);
MultilinPoly ml_monomial(int m, const MultiExp& s, const FF& coeff);
void ml_add_term(const ExtField& F, MultilinPoly& f, const MultiExp& s, const FF& c);
MultilinPoly ml_add(const ExtField& F, const MultilinPoly& a, const MultilinPoly& b);
MultilinPoly ml_sub(const ExtField& F, const MultilinPoly& a, const MultilinPoly& b);

/// Set of exponent tuples in [0, n-1]^m.
struct SupportSet {
  int m = 1;
  std::set<MultiExp> points;

  bool contains(const MultiExp& s) const { return points.count(s) != 0; }
  int max_coord(int j) const;  // max of j-th projection, throws if empty
  int max_coord() const;       // max over all projections
  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

SupportSet support_box(const std::vector<int>& mu);          // prod [0, mu_j]
SupportSet support_plus_interval(const SupportSet& S, int t);  // S + [0, t]
SupportSet support_complement(const SupportSet& S, int n);     // [0,n-1]^m \ S

// --- operations ---

/// Reduces every exponent mod n, summing coefficients of colliding
/// monomials; evaluation on GF(q^n)^m is unchanged.
MultilinPoly normal_form(const ExtField& F, const MultilinPoly& f);

FF evaluate(const ExtField& F, const MultilinPoly& f, const std::vector<FF>& point);

/// V(f): left action of the linearised polynomial ring. Coefficient at t is
/// sum over l of v_l * f_(t - l)^(q^l), support within Supp(f) + Supp(V).
MultilinPoly compose_left(const ExtField& F, const LinPoly& V, const MultilinPoly& f);

/// GF(q)-basis of {x : V(x) = 0}; dimension <= q_degree(V). V must be nonzero.
std::vector<FF> kernel(const ExtField& F, const LinPoly& V);

/// Monic linearised polynomial of q-degree dim(U) with kernel exactly
/// span(U). Throws on a linearly dependent input family.
LinPoly annihilator(const ExtField& F, const std::vector<FF>& U);

/// Basis of Rad_j(f) for an order-2 polynomial in normal form, computed as
/// the intersection of the kernels of the slot coefficient polynomials.
std::vector<FF> radical(const ExtField& F, const MultilinPoly& f, int side);

/// Splits an order-2 polynomial along diagonals: N(X,Y) = sum_d N_d(X Y^(q^d)).
std::map<int, LinPoly> diagonal_decompose(const MultilinPoly& N);

/// Recovers f with Supp(f) within S from N = V(f). Returns nothing when the
/// reconstruction does not verify (no factorisation with that support).
std::optional<MultilinPoly> factor_left(const ExtField& F, const LinPoly& V,
                                        const MultilinPoly& N, const SupportSet& S);

}  // namespace rtc
