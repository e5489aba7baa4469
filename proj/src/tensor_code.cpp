#include "rtc/tensor_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtc {

Word Word::zeros(int m, int n) {
  Word w;
  w.m = m;
  w.n = n;
  size_t sz = 1;
  for (int j = 0; j < m; ++j) sz *= static_cast<size_t>(n);
  w.a.assign(sz, FF{});
  return w;
}

size_t Word::flat(const std::vector<int>& idx) const {
  size_t f = 0;
  for (int j = 0; j < m; ++j) f = f * static_cast<size_t>(n) + static_cast<size_t>(idx[j]);
  return f;
}

Word word_add(const ExtField& F, const Word& x, const Word& y) {
  if (x.m != y.m || x.n != y.n) throw std::invalid_argument("word_add: shape mismatch");
  Word r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.add(r.a[i], y.a[i]);
  return r;
}

Word word_sub(const ExtField& F, const Word& x, const Word& y) {
  if (x.m != y.m || x.n != y.n) throw std::invalid_argument("word_sub: shape mismatch");
  Word r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.sub(r.a[i], y.a[i]);
  return r;
}

bool next_index(std::vector<int>& idx, int n) {
  int j = static_cast<int>(idx.size());
  while (j-- > 0) {
    if (++idx[static_cast<size_t>(j)] < n) return true;
    idx[static_cast<size_t>(j)] = 0;
  }
  return false;
}

std::vector<FF> mode_fibre(const Word& w, int j, const std::vector<int>& base) {
  std::vector<FF> f(static_cast<size_t>(w.n));
  std::vector<int> idx = base;
  for (int v = 0; v < w.n; ++v) {
    idx[static_cast<size_t>(j)] = v;
    f[static_cast<size_t>(v)] = w.at(idx);
  }
  return f;
}

void set_mode_fibre(Word& w, int j, const std::vector<int>& base, const std::vector<FF>& fibre) {
  std::vector<int> idx = base;
  for (int v = 0; v < w.n; ++v) {
    idx[static_cast<size_t>(j)] = v;
    w.at(idx) = fibre[static_cast<size_t>(v)];
  }
}

GroundTensor GroundTensor::zeros(std::vector<int> dims) {
  GroundTensor g;
  g.dims = std::move(dims);
  size_t sz = 1;
  for (int d : g.dims) sz *= static_cast<size_t>(d);
  g.a.assign(sz, 0);
  return g;
}

size_t GroundTensor::flat(const std::vector<int>& idx) const {
  size_t f = 0;
  for (size_t j = 0; j < dims.size(); ++j)
    f = f * static_cast<size_t>(dims[j]) + static_cast<size_t>(idx[j]);
  return f;
}

CodeSpec make_code_spec(std::shared_ptr<const ExtField> field, FieldBasis alpha, SupportSet S) {
  CodeSpec spec;
  if (!field) throw std::invalid_argument("code spec: missing field");
  if (!is_basis(*field, alpha.elems)) throw std::invalid_argument("code spec: not a basis");
  const int n = static_cast<int>(field->n());
  for (const auto& s : S.points)
    for (int x : s)
      if (x < 0 || x >= n) throw std::invalid_argument("code spec: support out of range");
  spec.field = std::move(field);
  spec.alpha = std::move(alpha);
  spec.m = S.m;
  spec.support = std::move(S);
  spec.alpha_dual = dual_basis(*spec.field, spec.alpha);
  spec.moore = moore_matrix(*spec.field, spec.alpha, n);
  spec.moore_dual = moore_matrix(*spec.field, spec.alpha_dual, n);
  return spec;
}

namespace {

// Replaces mode j of w by M-contraction: out[.., r, ..] = sum_i M[r][i] w[.., i, ..].
Word contract_mode(const ExtField& F, const Word& w, int j, const FFMat& M) {
  Word out = Word::zeros(w.m, w.n);
  std::vector<int> base(static_cast<size_t>(w.m), 0);
  do {
    if (base[static_cast<size_t>(j)] != 0) continue;
    std::vector<FF> fib = mode_fibre(w, j, base);
    std::vector<FF> img(static_cast<size_t>(w.n), FF{});
    for (int r = 0; r < w.n; ++r) {
      FF acc = F.zero();
      for (int i = 0; i < w.n; ++i) {
        const FF& c = M.at(r, i);
        if (!F.is_zero(c)) acc = F.add(acc, F.mul(c, fib[static_cast<size_t>(i)]));
      }
      img[static_cast<size_t>(r)] = acc;
    }
    set_mode_fibre(out, j, base, img);
  } while (next_index(base, w.n));
  return out;
}

}  // namespace

Word encode(const CodeSpec& spec, const MultilinPoly& message) {
  const ExtField& F = *spec.field;
  const int n = static_cast<int>(F.n());
  if (message.m != spec.m) throw std::invalid_argument("encode: order mismatch");
  for (const auto& [s, c] : message.coeffs)
    if (!spec.support.contains(s)) throw std::invalid_argument("encode: support violation");

  // dense coefficient array, then mode-wise multiplication by M(alpha)^T:
  // C[i] = sum_s f_s prod_j alpha_{i_j}^(q^(s_j))
  Word coeff = Word::zeros(spec.m, n);
  for (const auto& [s, c] : message.coeffs) coeff.at(s) = c;
  FFMat MT = ffmat_transpose(spec.moore);
  Word out = coeff;
  for (int j = 0; j < spec.m; ++j) out = contract_mode(F, out, j, MT);
  return out;
}

MultilinPoly interpolate(const CodeSpec& spec, const Word& w) {
  const ExtField& F = *spec.field;
  if (w.m != spec.m || w.n != static_cast<int>(F.n()))
    throw std::invalid_argument("interpolate: shape mismatch");
  // f_r = sum_i w[i] prod_j (alpha^dual_{i_j})^(q^(r_j))
  Word coeff = w;
  for (int j = 0; j < spec.m; ++j) coeff = contract_mode(F, coeff, j, spec.moore_dual);
  MultilinPoly f = ml_zero(spec.m);
  std::vector<int> r(static_cast<size_t>(spec.m), 0);
  do {
    const FF& c = coeff.at(r);
    if (!F.is_zero(c)) f.coeffs[r] = c;
  } while (next_index(r, w.n));
  return f;
}

MultilinPoly decode_to_message(const CodeSpec& spec, const Word& w) {
  MultilinPoly f = interpolate(spec, w);
  for (const auto& [s, c] : f.coeffs)
    if (!spec.support.contains(s)) throw std::domain_error("decode_to_message: not a codeword");
  return f;
}

bool membership(const CodeSpec& spec, const Word& w) {
  MultilinPoly f = interpolate(spec, w);
  for (const auto& [s, c] : f.coeffs)
    if (!spec.support.contains(s)) return false;
  return true;
}

bool gabidulin_membership(const CodeSpec& spec, const std::vector<FF>& v, int k) {
  const ExtField& F = *spec.field;
  const int n = static_cast<int>(F.n());
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("gabidulin_membership: length");
  for (int r = k; r < n; ++r) {
    FF acc = F.zero();
    for (int i = 0; i < n; ++i) acc = F.add(acc, F.mul(v[static_cast<size_t>(i)], spec.moore_dual.at(r, i)));
    if (!F.is_zero(acc)) return false;
  }
  return true;
}

CodeSpec dual_code(const CodeSpec& spec) {
  if (spec.m != 2) throw std::invalid_argument("dual_code: order 2 only");
  SupportSet comp = support_complement(spec.support, static_cast<int>(spec.field->n()));
  return make_code_spec(spec.field, spec.alpha_dual, std::move(comp));
}

SupportTranslation translate_support(const CodeSpec& spec, int r1, int r2) {
  if (spec.m != 2) throw std::invalid_argument("translate_support: order 2 only");
  const ExtField& F = *spec.field;
  const int n = static_cast<int>(F.n());

  SupportSet S2;
  S2.m = 2;
  for (const auto& s : spec.support.points) {
    MultiExp e{(((s[0] + r1) % n) + n) % n, (((s[1] + r2) % n) + n) % n};
    S2.points.insert(std::move(e));
  }

  // A with M(alpha^(q^r)) = M(alpha) A; its entries lie in GF(q).
  auto change = [&](int r) {
    FieldBasis shifted;
    for (const FF& x : spec.alpha.elems) shifted.elems.push_back(F.frobenius(x, r));
    FFMat Ms = moore_matrix(F, shifted, n);
    FFMat A = ffmat_mul(F, ffmat_inverse(F, spec.moore), Ms);
    GMat G(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const FF& c = A.at(i, j);
        for (int t = 1; t < n; ++t)
          if (c.c[t] != 0) throw std::logic_error("translate_support: non-ground entry");
        G.at(i, j) = c.c[0];
      }
    return G;
  };

  SupportTranslation out{make_code_spec(spec.field, spec.alpha, std::move(S2)),
                         gmat_transpose(change(r1)), change(r2)};
  return out;
}

GroundTensor ground_tensor(const ExtField& F, const Word& w, const FieldBasis& omega) {
  const int n = static_cast<int>(F.n());
  if (!is_basis(F, omega.elems)) throw std::invalid_argument("ground_tensor: not a basis");
  // inverse coordinate map of x -> sum_k coord_k omega_k
  GMat Om(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) Om.at(i, k) = omega.elems[static_cast<size_t>(k)].c[i];
  // invert by solving Om X = I
  GMat inv(n, n);
  for (int col = 0; col < n; ++col) {
    std::vector<uint8_t> e(static_cast<size_t>(n), 0), x;
    e[static_cast<size_t>(col)] = 1;
    if (gmat_solve(F.base(), Om, e, x) != SolveStatus::kUnique)
      throw std::logic_error("ground_tensor: basis matrix not invertible");
    for (int i = 0; i < n; ++i) inv.at(i, col) = x[static_cast<size_t>(i)];
  }

  std::vector<int> dims(static_cast<size_t>(w.m) + 1, n);
  GroundTensor g = GroundTensor::zeros(dims);
  std::vector<int> idx(static_cast<size_t>(w.m), 0);
  std::vector<int> gidx(static_cast<size_t>(w.m) + 1, 0);
  do {
    const FF& x = w.at(idx);
    for (int j = 0; j < w.m; ++j) gidx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j)];
    for (int k = 0; k < n; ++k) {
      uint32_t acc = 0;
      for (int i = 0; i < n; ++i) acc = F.base().add(acc, F.base().mul(inv.at(k, i), x.c[i]));
      gidx[static_cast<size_t>(w.m)] = k;
      g.at(gidx) = static_cast<uint8_t>(acc);
    }
  } while (next_index(idx, w.n));
  return g;
}

Word from_ground(const ExtField& F, const GroundTensor& g, const FieldBasis& omega) {
  const int n = static_cast<int>(F.n());
  const int m = static_cast<int>(g.dims.size()) - 1;
  for (int d : g.dims)
    if (d != n) throw std::invalid_argument("from_ground: dimension mismatch");
  Word w = Word::zeros(m, n);
  std::vector<int> idx(static_cast<size_t>(m), 0);
  std::vector<int> gidx(static_cast<size_t>(m) + 1, 0);
  do {
    FF acc = F.zero();
    for (int j = 0; j < m; ++j) gidx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j)];
    for (int k = 0; k < n; ++k) {
      gidx[static_cast<size_t>(m)] = k;
      acc = F.add(acc, F.scal(g.at(gidx), omega.elems[static_cast<size_t>(k)]));
    }
    w.at(idx) = acc;
  } while (next_index(idx, w.n));
  return w;
}

FFMat interleave_embed(const CodeSpec& spec, const Word& w, EmbedVariant variant) {
  if (spec.m != 2) throw std::invalid_argument("interleave_embed: order 2 only");
  const ExtField& F = *spec.field;
  const int n = static_cast<int>(F.n());
  switch (variant) {
    case EmbedVariant::kRows: {
      FFMat M(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = w.at2(i, j);
      return M;
    }
    case EmbedVariant::kCols: {
      FFMat M(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = w.at2(j, i);
      return M;
    }
    case EmbedVariant::kBoth: {
      FFMat M(1, 2 * n * n);
      int t = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.at(0, t++) = w.at2(i, j);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) M.at(0, t++) = w.at2(i, j);
      return M;
    }
    case EmbedVariant::kIso3: {
      // requires a full box support [0,mu1] x [0,mu2]
      int mu1 = spec.support.max_coord(0), mu2 = spec.support.max_coord(1);
      if (spec.support.points.size() !=
          static_cast<size_t>((mu1 + 1)) * static_cast<size_t>(mu2 + 1))
        throw std::invalid_argument("interleave_embed: iso3 needs a box support");
      FFMat Md = moore_matrix(F, spec.alpha_dual, mu1 + 1);
      FFMat W(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) W.at(i, j) = w.at2(i, j);
      return ffmat_mul(F, Md, W);  // (mu1+1) x n, rows in G_{mu2+1}(alpha)
    }
  }
  throw std::invalid_argument("interleave_embed: unknown variant");
}

}  // namespace rtc
