#include "rtc/decoders.hpp"

#include <algorithm>
#include <stdexcept>

#include "rtc/metrics.hpp"

namespace rtc {

namespace {

// Side of the box [0,mu]^m when S is one; -1 otherwise.
int cube_side(const SupportSet& S) {
  if (S.points.empty()) return -1;
  int mu = 0;
  for (const auto& s : S.points)
    for (int x : s) mu = std::max(mu, x);
  size_t expected = 1;
  for (int j = 0; j < S.m; ++j) expected *= static_cast<size_t>(mu + 1);
  if (S.points.size() != expected) return -1;
  return mu;
}

// Nullspace of the interpolation system for an arbitrary word shape. The
// Moore matrix supplies alpha_i^(q^e); exponents reduce mod n.
std::vector<std::vector<FF>> interp_nullspace(const ExtField& F, const FFMat& moore,
                                              const Word& R, int t,
                                              const std::vector<MultiExp>& supp_n) {
  const int n = R.n;
  const int rows = static_cast<int>(R.a.size());
  const int cols = (t + 1) + static_cast<int>(supp_n.size());
  FFMat A(rows, cols);
  std::vector<int> idx(static_cast<size_t>(R.m), 0);
  int row = 0;
  do {
    const FF& ri = R.at(idx);
    for (int l = 0; l <= t; ++l) A.at(row, l) = F.frobenius(ri, l);
    for (size_t c = 0; c < supp_n.size(); ++c) {
      FF prod = F.one();
      for (int j = 0; j < R.m; ++j)
        prod = F.mul(prod, moore.at(supp_n[c][static_cast<size_t>(j)] % n,
                                    idx[static_cast<size_t>(j)]));
      A.at(row, t + 1 + static_cast<int>(c)) = F.neg(prod);
    }
    ++row;
  } while (next_index(idx, n));
  return ffmat_nullspace(F, A);
}

LinPoly lin_from_solution(const ExtField& F, const std::vector<FF>& sol, int t) {
  LinPoly V;
  for (int l = 0; l <= t; ++l)
    if (!F.is_zero(sol[static_cast<size_t>(l)])) V.coeffs[l] = sol[static_cast<size_t>(l)];
  return V;
}

MultilinPoly ml_from_solution(const ExtField& F, const std::vector<FF>& sol, int t,
                              const std::vector<MultiExp>& supp_n, int m) {
  MultilinPoly N = ml_zero(m);
  for (size_t c = 0; c < supp_n.size(); ++c) {
    const FF& v = sol[static_cast<size_t>(t) + 1 + c];
    if (!F.is_zero(v)) N.coeffs[supp_n[c]] = v;
  }
  return N;
}

DecodeOutcome failure(long nullspace_dim = -1) {
  DecodeOutcome out;
  out.status = DecodeStatus::kFailure;
  if (nullspace_dim >= 0) out.diagnostics["nullspace_dim"] = nullspace_dim;
  return out;
}

DecodeOutcome success(const CodeSpec& spec, const Word& R, MultilinPoly f) {
  DecodeOutcome out;
  out.status = DecodeStatus::kDecoded;
  out.codeword = encode(spec, f);
  out.message = std::move(f);
  out.error = word_sub(*spec.field, R, out.codeword);
  return out;
}

GabResult gab_dec_ctx(const ExtField& F, const FFMat& moore, const std::vector<FF>& r, int k) {
  const int n = static_cast<int>(F.n());
  GabResult out;
  out.codeword = r;
  const int t0 = (n - k) / 2;

  Word rw;
  rw.m = 1;
  rw.n = n;
  rw.a = r;
  std::vector<MultiExp> supp_n;
  for (int e = 0; e <= k - 1 + t0; ++e) supp_n.push_back({e});
  auto null_basis = interp_nullspace(F, moore, rw, t0, supp_n);
  if (null_basis.empty()) return out;

  const auto& sol = null_basis.front();
  LinPoly V = lin_from_solution(F, sol, t0);
  if (V.is_zero()) return out;
  MultilinPoly N = ml_from_solution(F, sol, t0, supp_n, 1);
  SupportSet S;
  S.m = 1;
  for (int e = 0; e < k; ++e) S.points.insert({e});
  auto f = factor_left(F, V, N, S);
  if (!f) return out;

  std::vector<FF> c(static_cast<size_t>(n), FF{});
  for (int i = 0; i < n; ++i) {
    FF acc = F.zero();
    for (const auto& [s, coef] : f->coeffs) acc = F.add(acc, F.mul(coef, moore.at(s[0] % n, i)));
    c[static_cast<size_t>(i)] = acc;
  }
  std::vector<FF> e(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = F.sub(r[static_cast<size_t>(i)], c[static_cast<size_t>(i)]);
  if (rank_fq(F, e) > t0) return out;

  out.codeword = std::move(c);
  out.success = true;
  return out;
}

}  // namespace

GabResult gab_dec(const ExtField& F, const FieldBasis& alpha, const std::vector<FF>& r, int k) {
  const int n = static_cast<int>(F.n());
  if (k < 1 || k > n) throw std::invalid_argument("gab_dec: k out of range");
  if (static_cast<int>(r.size()) != n) throw std::invalid_argument("gab_dec: wrong length");
  return gab_dec_ctx(F, moore_matrix(F, alpha, n), r, k);
}

LinearisedSystem solve_linearised(const CodeSpec& spec, const Word& R, int t) {
  if (t < 0 || t > static_cast<int>(spec.field->n()) - 1)
    throw std::invalid_argument("solve_linearised: t out of range");
  LinearisedSystem sys;
  sys.t = t;
  SupportSet grown = support_plus_interval(spec.support, t);
  sys.support_n.assign(grown.points.begin(), grown.points.end());
  sys.nullspace = interp_nullspace(*spec.field, spec.moore, R, t, sys.support_n);
  return sys;
}

DecodeOutcome decode_fibrewise(const CodeSpec& spec, const Word& R, int j) {
  if (j < 1 || j > spec.m) throw std::invalid_argument("decode_fibrewise: mode out of range");
  const ExtField& F = *spec.field;
  const int mode = j - 1;
  const int k = spec.support.max_coord(mode) + 1;

  Word C = Word::zeros(R.m, R.n);
  long fails = 0;
  std::vector<int> base(static_cast<size_t>(R.m), 0);
  do {
    if (base[static_cast<size_t>(mode)] != 0) continue;
    GabResult g = gab_dec_ctx(F, spec.moore, mode_fibre(R, mode, base), k);
    if (!g.success) ++fails;
    set_mode_fibre(C, mode, base, g.codeword);
  } while (next_index(base, R.n));

  DecodeOutcome out;
  out.diagnostics["fibre_failures"] = fails;
  out.candidate = C;
  if (!membership(spec, C)) {
    out.status = DecodeStatus::kFailure;
    return out;
  }
  out.status = DecodeStatus::kDecoded;
  out.codeword = C;
  out.message = decode_to_message(spec, C);
  out.error = word_sub(F, R, C);
  return out;
}

namespace {

// One fibre-wise pass without the membership gate, for composition.
Word fibre_pass(const CodeSpec& spec, const Word& R, int mode) {
  const ExtField& F = *spec.field;
  const int k = spec.support.max_coord(mode) + 1;
  Word C = Word::zeros(R.m, R.n);
  std::vector<int> base(static_cast<size_t>(R.m), 0);
  do {
    if (base[static_cast<size_t>(mode)] != 0) continue;
    set_mode_fibre(C, mode, base, gab_dec_ctx(F, spec.moore, mode_fibre(R, mode, base), k).codeword);
  } while (next_index(base, R.n));
  return C;
}

DecodeOutcome finish_word(const CodeSpec& spec, const Word& R, const Word& C) {
  DecodeOutcome out;
  out.candidate = C;
  if (!membership(spec, C)) {
    out.status = DecodeStatus::kFailure;
    return out;
  }
  out.status = DecodeStatus::kDecoded;
  out.codeword = C;
  out.message = decode_to_message(spec, C);
  out.error = word_sub(*spec.field, R, C);
  return out;
}

}  // namespace

DecodeOutcome decode_twoway(const CodeSpec& spec, const Word& R, bool column_first) {
  if (spec.m != 2) throw std::invalid_argument("decode_twoway: order 2 only");
  if (cube_side(spec.support) < 0) {
    // a rectangular box is enough; verify |S| = (mu1+1)(mu2+1)
    int mu1 = spec.support.max_coord(0), mu2 = spec.support.max_coord(1);
    if (spec.support.points.size() !=
        static_cast<size_t>(mu1 + 1) * static_cast<size_t>(mu2 + 1))
      throw std::invalid_argument("decode_twoway: box support required");
  }
  Word mid = fibre_pass(spec, R, column_first ? 0 : 1);
  Word C = fibre_pass(spec, mid, column_first ? 1 : 0);
  return finish_word(spec, R, C);
}

DecodeOutcome decode_allmodes(const CodeSpec& spec, const Word& R) {
  Word cur = R;
  for (int mode = 0; mode < spec.m; ++mode) cur = fibre_pass(spec, cur, mode);
  return finish_word(spec, R, cur);
}

DecodeOutcome decode_radical_fixed(const CodeSpec& spec, const Word& R, int t) {
  if (cube_side(spec.support) < 0)
    throw std::invalid_argument("decode_radical_fixed: support must be a cube [0,mu]^m");
  const ExtField& F = *spec.field;
  LinearisedSystem sys = solve_linearised(spec, R, t);
  if (sys.nullspace.empty()) return failure(0);

  const auto& sol = sys.nullspace.front();
  LinPoly V = lin_from_solution(F, sol, t);
  if (V.is_zero()) return failure(static_cast<long>(sys.nullspace.size()));
  MultilinPoly N = ml_from_solution(F, sol, t, sys.support_n, spec.m);
  auto f = factor_left(F, V, N, spec.support);
  if (!f) {
    DecodeOutcome out = failure(static_cast<long>(sys.nullspace.size()));
    out.diagnostics["factor_failure"] = 1;
    return out;
  }
  DecodeOutcome out = success(spec, R, std::move(*f));
  out.diagnostics["nullspace_dim"] = static_cast<long>(sys.nullspace.size());
  return out;
}

DecodeOutcome decode_radical(const CodeSpec& spec, const Word& R) {
  const int mu = cube_side(spec.support);
  if (mu < 0) throw std::invalid_argument("decode_radical: support must be a cube [0,mu]^m");
  const ExtField& F = *spec.field;
  const int n = static_cast<int>(F.n());
  const int tstar = n - mu - 2;
  if (tstar < 0) throw std::invalid_argument("decode_radical: requires mu <= n - 2");

  LinearisedSystem sys = solve_linearised(spec, R, tstar);
  if (sys.nullspace.empty()) return failure(0);
  const size_t dim = sys.nullspace.size();
  const size_t cols = sys.nullspace.front().size();

  for (int delta = 0; delta <= tstar; ++delta) {
    // coordinates that a degree-delta solution must vanish on
    std::vector<size_t> constrained;
    for (int l = delta + 1; l <= tstar; ++l) constrained.push_back(static_cast<size_t>(l));
    SupportSet allowed = support_plus_interval(spec.support, delta);
    for (size_t c = 0; c < sys.support_n.size(); ++c)
      if (!allowed.contains(sys.support_n[c]))
        constrained.push_back(static_cast<size_t>(sys.t) + 1 + c);

    std::vector<std::vector<FF>> combos;
    if (constrained.empty()) {
      combos = sys.nullspace;
    } else {
      FFMat A(static_cast<int>(constrained.size()), static_cast<int>(dim));
      for (size_t r = 0; r < constrained.size(); ++r)
        for (size_t b = 0; b < dim; ++b)
          A.at(static_cast<int>(r), static_cast<int>(b)) = sys.nullspace[b][constrained[r]];
      for (const auto& mix : ffmat_nullspace(F, A)) {
        std::vector<FF> combo(cols, F.zero());
        for (size_t b = 0; b < dim; ++b) {
          if (F.is_zero(mix[b])) continue;
          for (size_t c = 0; c < cols; ++c)
            combo[c] = F.add(combo[c], F.mul(mix[b], sys.nullspace[b][c]));
        }
        combos.push_back(std::move(combo));
      }
      if (combos.empty()) continue;
    }

    // factor every basis solution at this delta; distinct decoded words mean
    // the received word is outside the guarantee region, so fail cleanly
    std::optional<MultilinPoly> decoded;
    bool disagree = false;
    for (const auto& combo : combos) {
      LinPoly V = lin_from_solution(F, combo, sys.t);
      if (V.is_zero()) continue;
      MultilinPoly N = ml_from_solution(F, combo, sys.t, sys.support_n, spec.m);
      auto f = factor_left(F, V, N, spec.support);
      if (!f) continue;
      if (!decoded) {
        decoded = std::move(f);
      } else if (!(*decoded == *f)) {
        disagree = true;
        break;
      }
    }
    if (disagree) {
      DecodeOutcome out = failure(static_cast<long>(dim));
      out.diagnostics["delta"] = delta;
      out.diagnostics["candidates_disagree"] = 1;
      return out;
    }
    if (!decoded) continue;
    DecodeOutcome out = success(spec, R, std::move(*decoded));
    out.diagnostics["delta"] = delta;
    out.diagnostics["nullspace_dim"] = static_cast<long>(dim);
    return out;
  }
  return failure(static_cast<long>(dim));
}

DecodeOutcome decode_supercode(const CodeSpec& spec, const Word& R, int t) {
  const int mu = cube_side(spec.support);
  if (mu < 0) throw std::invalid_argument("decode_supercode: support must be a cube [0,mu]^m");
  const ExtField& F = *spec.field;
  const GroundField& K = F.base();
  const int n = static_cast<int>(F.n());
  if (t > n - mu - 1) throw std::invalid_argument("decode_supercode: t exceeds n - mu - 1");

  LinearisedSystem sys = solve_linearised(spec, R, t);
  if (sys.nullspace.empty()) return failure(0);
  LinPoly V = lin_from_solution(F, sys.nullspace.front(), t);
  if (V.is_zero()) return failure(static_cast<long>(sys.nullspace.size()));

  std::vector<FF> ker = kernel(F, V);
  const int kd = static_cast<int>(ker.size());
  MultilinPoly rf = interpolate(spec, R);

  SupportSet outside = support_complement(spec.support, n);
  const size_t cells = R.a.size();
  if (kd == 0) {
    // V injective: the only admissible error is zero
    if (!membership(spec, R)) return failure(static_cast<long>(sys.nullspace.size()));
    DecodeOutcome out = success(spec, R, decode_to_message(spec, R));
    out.diagnostics["kernel_dim"] = 0;
    return out;
  }

  // GF(q) system: unknowns e[cell][d] with E[cell] = sum_d e[cell][d] ker_d;
  // for each r outside S, sum_cell E[cell] * D_r[cell] = coeff_r(R).
  const int unknowns = static_cast<int>(cells) * kd;
  const int eqs = static_cast<int>(outside.points.size()) * n;
  GMat A(eqs, unknowns);
  std::vector<uint8_t> b(static_cast<size_t>(eqs), 0);

  int block = 0;
  for (const auto& r : outside.points) {
    FF rhs = F.zero();
    if (auto it = rf.coeffs.find(r); it != rf.coeffs.end()) rhs = it->second;
    for (int row = 0; row < n; ++row) b[static_cast<size_t>(block * n + row)] = rhs.c[row];

    std::vector<int> idx(static_cast<size_t>(spec.m), 0);
    size_t cell = 0;
    do {
      FF d_r = F.one();
      for (int j = 0; j < spec.m; ++j)
        d_r = F.mul(d_r, spec.moore_dual.at(r[static_cast<size_t>(j)] % n,
                                            idx[static_cast<size_t>(j)]));
      for (int d = 0; d < kd; ++d) {
        FF coef = F.mul(ker[static_cast<size_t>(d)], d_r);
        for (int row = 0; row < n; ++row)
          A.at(block * n + row, static_cast<int>(cell) * kd + d) = coef.c[row];
      }
      ++cell;
    } while (next_index(idx, n));
    ++block;
  }

  std::vector<uint8_t> x;
  SolveStatus st = gmat_solve(K, A, b, x);
  DecodeOutcome out;
  out.diagnostics["kernel_dim"] = kd;
  out.diagnostics["nullspace_dim"] = static_cast<long>(sys.nullspace.size());
  if (st != SolveStatus::kUnique) {
    out.status = DecodeStatus::kFailure;
    out.diagnostics["affine_status"] = st == SolveStatus::kNone ? 0 : 2;
    return out;
  }

  Word E = Word::zeros(spec.m, n);
  for (size_t cell = 0; cell < cells; ++cell) {
    FF acc = F.zero();
    for (int d = 0; d < kd; ++d)
      acc = F.add(acc, F.scal(x[cell * static_cast<size_t>(kd) + static_cast<size_t>(d)],
                              ker[static_cast<size_t>(d)]));
    E.a[cell] = acc;
  }
  Word C = word_sub(F, R, E);
  if (!membership(spec, C)) {
    out.status = DecodeStatus::kFailure;
    return out;
  }
  out.status = DecodeStatus::kDecoded;
  out.codeword = C;
  out.message = decode_to_message(spec, C);
  out.error = E;
  return out;
}

}  // namespace rtc
