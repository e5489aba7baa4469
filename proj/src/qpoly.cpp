#include "rtc/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "rtc/linalg.hpp"

namespace rtc {

int LinPoly::q_degree() const {
  if (coeffs.empty()) throw std::domain_error("q_degree of zero polynomial");
  return coeffs.rbegin()->first;
}

int LinPoly::min_exponent() const {
  if (coeffs.empty()) throw std::domain_error("min exponent of zero polynomial");
  return coeffs.begin()->first;
}

LinPoly lin_identity(const ExtField& F) { return lin_monomial(F, 0, F.one()); }

LinPoly lin_monomial(const ExtField& F, int exp, const FF& coeff) {
  LinPoly V;
  if (!F.is_zero(coeff)) V.coeffs[exp] = coeff;
  return V;
}

LinPoly lin_add(const ExtField& F, const LinPoly& a, const LinPoly& b) {
  LinPoly r = a;
  for (const auto& [e, c] : b.coeffs) {
    auto it = r.coeffs.find(e);
    if (it == r.coeffs.end()) {
      r.coeffs[e] = c;
    } else {
      it->second = F.add(it->second, c);
      if (F.is_zero(it->second)) r.coeffs.erase(it);
    }
  }
  return r;
}

LinPoly lin_compose(const ExtField& F, const LinPoly& a, const LinPoly& b) {
  LinPoly r;
  for (const auto& [ea, ca] : a.coeffs)
    for (const auto& [eb, cb] : b.coeffs) {
      FF c = F.mul(ca, F.frobenius(cb, ea));
      int e = ea + eb;
      auto it = r.coeffs.find(e);
      if (it == r.coeffs.end()) {
        if (!F.is_zero(c)) r.coeffs[e] = c;
      } else {
        it->second = F.add(it->second, c);
        if (F.is_zero(it->second)) r.coeffs.erase(it);
      }
    }
  return r;
}

FF lin_eval(const ExtField& F, const LinPoly& V, const FF& x) {
  FF r = F.zero();
  for (const auto& [e, c] : V.coeffs) r = F.add(r, F.mul(c, F.frobenius(x, e)));
  return r;
}

int MultilinPoly::partial_q_degree(int j) const {
  if (coeffs.empty()) throw std::domain_error("partial q-degree of zero polynomial");
  int d = 0;
  for (const auto& [s, c] : coeffs) d = std::max(d, s[static_cast<size_t>(j)]);
  return d;
}

int MultilinPoly::max_partial_q_degree() const {
  int d = 0;
  for (int j = 0; j < m; ++j) d = std::max(d, partial_q_degree(j));
  return d;
}

std::set<MultiExp> MultilinPoly::support() const {
  std::set<MultiExp> s;
  for (const auto& [e, c] : coeffs) s.insert(e);
  return s;
}

MultilinPoly ml_zero(int m) {
  MultilinPoly f;
  f.m = m;
  return f;
}

MultilinPoly ml_monomial(int m, const MultiExp& s, const FF& coeff) {
  MultilinPoly f;
  f.m = m;
  if (coeff != FF{}) f.coeffs[s] = coeff;
  return f;
}

void ml_add_term(const ExtField& F, MultilinPoly& f, const MultiExp& s, const FF& c) {
  if (F.is_zero(c)) return;
  auto it = f.coeffs.find(s);
  if (it == f.coeffs.end()) {
    f.coeffs[s] = c;
  } else {
    it->second = F.add(it->second, c);
    if (F.is_zero(it->second)) f.coeffs.erase(it);
  }
}

MultilinPoly ml_add(const ExtField& F, const MultilinPoly& a, const MultilinPoly& b) {
  MultilinPoly r = a;
  for (const auto& [s, c] : b.coeffs) ml_add_term(F, r, s, c);
  return r;
}

MultilinPoly ml_sub(const ExtField& F, const MultilinPoly& a, const MultilinPoly& b) {
  MultilinPoly r = a;
  for (const auto& [s, c] : b.coeffs) ml_add_term(F, r, s, F.neg(c));
  return r;
}

int SupportSet::max_coord(int j) const {
  if (points.empty()) throw std::domain_error("max of empty support");
  int d = 0;
  for (const auto& s : points) d = std::max(d, s[static_cast<size_t>(j)]);
  return d;
}

int SupportSet::max_coord() const {
  int d = 0;
  for (int j = 0; j < m; ++j) d = std::max(d, max_coord(j));
  return d;
}

SupportSet support_box(const std::vector<int>& mu) {
  SupportSet S;
  S.m = static_cast<int>(mu.size());
  MultiExp s(mu.size(), 0);
  while (true) {
    S.points.insert(s);
    int j = 0;
    while (j < S.m && s[static_cast<size_t>(j)] == mu[static_cast<size_t>(j)]) {
      s[static_cast<size_t>(j)] = 0;
      ++j;
    }
    if (j == S.m) break;
    ++s[static_cast<size_t>(j)];
  }
  return S;
}

SupportSet support_plus_interval(const SupportSet& S, int t) {
  SupportSet R;
  R.m = S.m;
  for (const auto& s : S.points)
    for (int d = 0; d <= t; ++d) {
      MultiExp e = s;
      for (auto& x : e) x += d;
      R.points.insert(std::move(e));
    }
  return R;
}

SupportSet support_complement(const SupportSet& S, int n) {
  std::vector<int> mu(static_cast<size_t>(S.m), n - 1);
  SupportSet box = support_box(mu);
  SupportSet R;
  R.m = S.m;
  for (const auto& s : box.points)
    if (!S.contains(s)) R.points.insert(s);
  return R;
}

MultilinPoly normal_form(const ExtField& F, const MultilinPoly& f) {
  const int n = static_cast<int>(F.n());
  MultilinPoly r = ml_zero(f.m);
  for (const auto& [s, c] : f.coeffs) {
    MultiExp e = s;
    for (auto& x : e) x = ((x % n) + n) % n;
    ml_add_term(F, r, e, c);
  }
  return r;
}

FF evaluate(const ExtField& F, const MultilinPoly& f, const std::vector<FF>& point) {
  if (point.size() != static_cast<size_t>(f.m))
    throw std::invalid_argument("evaluate: wrong arity");
  FF r = F.zero();
  for (const auto& [s, c] : f.coeffs) {
    FF t = c;
    for (int j = 0; j < f.m; ++j)
      t = F.mul(t, F.frobenius(point[static_cast<size_t>(j)], s[static_cast<size_t>(j)]));
    r = F.add(r, t);
  }
  return r;
}

MultilinPoly compose_left(const ExtField& F, const LinPoly& V, const MultilinPoly& f) {
  MultilinPoly r = ml_zero(f.m);
  for (const auto& [l, v] : V.coeffs)
    for (const auto& [s, c] : f.coeffs) {
      MultiExp e = s;
      for (auto& x : e) x += l;
      ml_add_term(F, r, e, F.mul(v, F.frobenius(c, l)));
    }
  return r;
}

std::vector<FF> kernel(const ExtField& F, const LinPoly& V) {
  if (V.is_zero()) throw std::domain_error("kernel: zero polynomial annihilates everything");
  const int n = static_cast<int>(F.n());
  FieldBasis pb = power_basis(F);
  GMat M(n, n);
  for (int j = 0; j < n; ++j) {
    FF im = lin_eval(F, V, pb.elems[static_cast<size_t>(j)]);
    for (int i = 0; i < n; ++i) M.at(i, j) = im.c[i];
  }
  std::vector<FF> basis;
  for (const auto& v : gmat_nullspace(F.base(), M)) {
    FF x = F.zero();
    for (int j = 0; j < n; ++j)
      x = F.add(x, F.scal(v[static_cast<size_t>(j)], pb.elems[static_cast<size_t>(j)]));
    basis.push_back(x);
  }
  return basis;
}

LinPoly annihilator(const ExtField& F, const std::vector<FF>& U) {
  LinPoly V = lin_identity(F);
  for (const FF& u : U) {
    FF vu = lin_eval(F, V, u);
    if (F.is_zero(vu))
      throw std::invalid_argument("annihilator: input family is linearly dependent");
    // V <- V(Z)^q - V(u)^(q-1) V(Z)
    LinPoly Vq;
    for (const auto& [e, c] : V.coeffs) Vq.coeffs[e + 1] = F.frobenius(c, 1);
    FF factor = F.div(F.frobenius(vu, 1), vu);  // vu^(q-1) = vu^q / vu
    LinPoly scaled;
    for (const auto& [e, c] : V.coeffs) scaled.coeffs[e] = F.neg(F.mul(factor, c));
    V = lin_add(F, Vq, scaled);
  }
  return V;
}

std::vector<FF> radical(const ExtField& F, const MultilinPoly& f, int side) {
  if (f.m != 2) throw std::invalid_argument("radical: order-2 polynomial required");
  if (side != 1 && side != 2) throw std::invalid_argument("radical: side must be 1 or 2");
  const int n = static_cast<int>(F.n());
  FieldBasis pb = power_basis(F);
  if (f.is_zero()) return pb.elems;

  // slot polynomials: side 1 groups by Y-exponent, side 2 by X-exponent
  std::map<int, LinPoly> slots;
  for (const auto& [s, c] : f.coeffs) {
    int key = side == 1 ? s[1] : s[0];
    int exp = side == 1 ? s[0] : s[1];
    slots[key].coeffs[exp] = c;
  }

  // intersection of kernels: stack the coordinate matrices of all slots
  GMat M(n * static_cast<int>(slots.size()), n);
  int row0 = 0;
  for (const auto& [key, P] : slots) {
    for (int j = 0; j < n; ++j) {
      FF im = lin_eval(F, P, pb.elems[static_cast<size_t>(j)]);
      for (int i = 0; i < n; ++i) M.at(row0 + i, j) = im.c[i];
    }
    row0 += n;
  }
  std::vector<FF> basis;
  for (const auto& v : gmat_nullspace(F.base(), M)) {
    FF x = F.zero();
    for (int j = 0; j < n; ++j)
      x = F.add(x, F.scal(v[static_cast<size_t>(j)], pb.elems[static_cast<size_t>(j)]));
    basis.push_back(x);
  }
  return basis;
}

std::map<int, LinPoly> diagonal_decompose(const MultilinPoly& N) {
  if (N.m != 2) throw std::invalid_argument("diagonal_decompose: order-2 polynomial required");
  std::map<int, LinPoly> out;
  for (const auto& [s, c] : N.coeffs) out[s[1] - s[0]].coeffs[s[0]] = c;
  return out;
}

std::optional<MultilinPoly> factor_left(const ExtField& F, const LinPoly& V,
                                        const MultilinPoly& N, const SupportSet& S) {
  if (V.is_zero()) throw std::invalid_argument("factor_left: V must be nonzero");
  if (N.m != S.m) throw std::invalid_argument("factor_left: order mismatch");
  MultilinPoly f = ml_zero(N.m);
  if (N.is_zero()) {
    // the zero polynomial always factors as V(0)
    return f;
  }

  const int lmin = V.min_exponent();
  const FF vmin_inv = F.inv(V.coeffs.at(lmin));
  const int M = S.points.empty() ? 0 : S.max_coord();
  const int m = S.m;

  // Walk every diagonal class of N_0^m: offsets d in [-M, M]^(m-1) relative
  // to the last coordinate tau, tau ascending. Within a class the recursion
  // only consults already-computed predecessors.
  std::vector<int> d(static_cast<size_t>(m > 1 ? m - 1 : 0), -M);
  while (true) {
    for (int tau = 0; tau <= M; ++tau) {
      MultiExp s(static_cast<size_t>(m));
      bool ok = true;
      for (int j = 0; j + 1 < m; ++j) {
        s[static_cast<size_t>(j)] = d[static_cast<size_t>(j)] + tau;
        if (s[static_cast<size_t>(j)] < 0) ok = false;
      }
      s[static_cast<size_t>(m - 1)] = tau;
      if (!ok || !S.contains(s)) continue;

      // f_s = (vmin^-1 (n_{s+lmin} - sum_{l>lmin, s+lmin-l in S} v_l f_{s+lmin-l}^(q^l)))^(1/q^lmin)
      MultiExp target = s;
      for (auto& x : target) x += lmin;
      FF acc = F.zero();
      if (auto it = N.coeffs.find(target); it != N.coeffs.end()) acc = it->second;
      for (auto vit = V.coeffs.upper_bound(lmin); vit != V.coeffs.end(); ++vit) {
        const int l = vit->first;
        MultiExp prev = s;
        bool in_range = true;
        for (auto& x : prev) {
          x += lmin - l;
          if (x < 0) in_range = false;
        }
        if (!in_range || !S.contains(prev)) continue;
        auto fit = f.coeffs.find(prev);
        if (fit == f.coeffs.end()) continue;
        acc = F.sub(acc, F.mul(vit->second, F.frobenius(fit->second, l)));
      }
      FF fs = F.inv_frobenius(F.mul(vmin_inv, acc), lmin);
      if (!F.is_zero(fs)) f.coeffs[s] = fs;
    }
    if (m == 1) break;
    int j = 0;
    while (j < m - 1 && d[static_cast<size_t>(j)] == M) {
      d[static_cast<size_t>(j)] = -M;
      ++j;
    }
    if (j == m - 1) break;
    ++d[static_cast<size_t>(j)];
  }

  // Unconditional verification: callers may feed pairs with no factorisation
  // of the requested support; silence would return garbage.
  if (compose_left(F, V, f) != N) return std::nullopt;
  return f;
}

}  // namespace rtc
