#include "rtc/channel.hpp"

#include <algorithm>
#include <stdexcept>

#include "rtc/metrics.hpp"

namespace rtc {

FF random_element(const ExtField& F, Rng& rng) { return F.element_at(rng.below(F.order())); }

FF random_nonzero(const ExtField& F, Rng& rng) {
  return F.element_at(1 + rng.below(F.order() - 1));
}

MultilinPoly random_message(const CodeSpec& spec, Rng& rng) {
  MultilinPoly f = ml_zero(spec.m);
  for (const auto& s : spec.support.points) {
    FF c = random_element(*spec.field, rng);
    if (!spec.field->is_zero(c)) f.coeffs[s] = c;
  }
  return f;
}

namespace {

// r field elements independent over GF(q)
std::vector<FF> random_independent(const ExtField& F, int r, Rng& rng) {
  std::vector<FF> lams;
  while (static_cast<int>(lams.size()) < r) {
    lams.push_back(random_nonzero(F, rng));
    if (rank_fq(F, lams) < static_cast<int>(lams.size())) lams.pop_back();
  }
  return lams;
}

}  // namespace

std::vector<FF> random_vector_rank(const ExtField& F, int r, Rng& rng) {
  const int n = static_cast<int>(F.n());
  if (r < 0 || r > n) throw std::invalid_argument("random_vector_rank: rank out of range");
  std::vector<FF> v(static_cast<size_t>(n), FF{});
  if (r == 0) return v;
  while (true) {
    std::vector<FF> lams = random_independent(F, r, rng);
    for (int i = 0; i < n; ++i) {
      FF acc = F.zero();
      for (int d = 0; d < r; ++d)
        acc = F.add(acc, F.scal(static_cast<uint32_t>(rng.below(F.q())), lams[static_cast<size_t>(d)]));
      v[static_cast<size_t>(i)] = acc;
    }
    if (rank_fq(F, v) == r) return v;
  }
}

Word sample_fibre_rank_error(const CodeSpec& spec, int j, int radius, Rng& rng) {
  const ExtField& F = *spec.field;
  const int mode = j - 1;
  const int n = static_cast<int>(F.n());
  while (true) {
    Word e = Word::zeros(spec.m, n);
    std::vector<int> base(static_cast<size_t>(spec.m), 0);
    do {
      if (base[static_cast<size_t>(mode)] != 0) continue;
      int r = static_cast<int>(rng.below(static_cast<uint64_t>(radius) + 1));
      set_mode_fibre(e, mode, base, random_vector_rank(F, r, rng));
    } while (next_index(base, n));
    if (radius == 0) return e;
    WeightReport rep = weights(F, e);
    if (rep.max_fibre_ranks[static_cast<size_t>(mode)] == radius) return e;
  }
}

Word sample_subset_j_error(const CodeSpec& spec, int jsize, int radius, Rng& rng) {
  if (spec.m != 2) throw std::invalid_argument("sample_subset_j_error: order 2 only");
  return sample_pairwise_error(spec, 1, 2, jsize, radius, rng);
}

Word sample_pairwise_error(const CodeSpec& spec, int j1, int j2, int jsize, int radius, Rng& rng) {
  const ExtField& F = *spec.field;
  const int n = static_cast<int>(F.n());
  const int m1 = j1 - 1, m2 = j2 - 1;
  if (m1 == m2) throw std::invalid_argument("sample_pairwise_error: modes must differ");
  Word e = Word::zeros(spec.m, n);

  // iterate over the coordinates other than m1, m2; for m = 2 there is a
  // single pass with an empty outer index
  std::vector<int> others;
  for (int j = 0; j < spec.m; ++j)
    if (j != m1 && j != m2) others.push_back(j);
  std::vector<int> oidx(others.size(), 0);
  bool more = true;
  while (more) {
    // pick the good index set J along mode m2
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[static_cast<size_t>(i)], perm[rng.below(static_cast<uint64_t>(i) + 1)]);
    std::vector<bool> good(static_cast<size_t>(n), false);
    for (int i = 0; i < jsize; ++i) good[static_cast<size_t>(perm[static_cast<size_t>(i)])] = true;

    std::vector<int> base(static_cast<size_t>(spec.m), 0);
    for (size_t t = 0; t < others.size(); ++t) base[static_cast<size_t>(others[t])] = oidx[t];
    for (int v2 = 0; v2 < n; ++v2) {
      base[static_cast<size_t>(m2)] = v2;
      std::vector<FF> fib;
      if (good[static_cast<size_t>(v2)]) {
        int r = static_cast<int>(rng.below(static_cast<uint64_t>(radius) + 1));
        fib = random_vector_rank(F, r, rng);
      } else {
        fib.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) fib[static_cast<size_t>(i)] = random_element(F, rng);
      }
      base[static_cast<size_t>(m1)] = 0;
      set_mode_fibre(e, m1, base, fib);
    }

    more = false;
    for (size_t t = 0; t < oidx.size(); ++t) {
      if (++oidx[t] < n) {
        more = true;
        break;
      }
      oidx[t] = 0;
    }
  }

  // re-verify the declared criterion on every slice before emitting
  std::vector<int> oidx2(others.size(), 0);
  bool more2 = true;
  while (more2) {
    std::vector<int> base(static_cast<size_t>(spec.m), 0);
    for (size_t t = 0; t < others.size(); ++t) base[static_cast<size_t>(others[t])] = oidx2[t];
    int good = 0;
    for (int v2 = 0; v2 < n; ++v2) {
      base[static_cast<size_t>(m2)] = v2;
      base[static_cast<size_t>(m1)] = 0;
      if (rank_fq(F, mode_fibre(e, m1, base)) <= radius) ++good;
    }
    if (good < jsize) throw std::logic_error("sample_pairwise_error: criterion violated");
    more2 = false;
    for (size_t t = 0; t < oidx2.size(); ++t) {
      if (++oidx2[t] < n) {
        more2 = true;
        break;
      }
      oidx2[t] = 0;
    }
  }
  return e;
}

Word sample_slice_fibre_error(const CodeSpec& spec, int sigma, int tau, Rng& rng) {
  const ExtField& F = *spec.field;
  const int n = static_cast<int>(F.n());
  if (tau == 0) return Word::zeros(spec.m, n);
  if (sigma == 0) throw std::invalid_argument("sample_slice_fibre_error: sigma 0 needs tau 0");
  while (true) {
    // E = sum_u c_u (x) B_u with c_u ground columns and B_u arrays over
    // span(lams): slice space along mode 1 has dim <= sigma and the fibre
    // space lies in a tau-dimensional span.
    std::vector<FF> lams = random_independent(F, tau, rng);
    Word e = Word::zeros(spec.m, n);
    size_t rest = e.a.size() / static_cast<size_t>(n);
    for (int u = 0; u < sigma; ++u) {
      std::vector<uint32_t> col(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = static_cast<uint32_t>(rng.below(F.q()));
      std::vector<FF> block(rest);
      for (size_t t = 0; t < rest; ++t) {
        FF acc = F.zero();
        for (int d = 0; d < tau; ++d)
          acc = F.add(acc, F.scal(static_cast<uint32_t>(rng.below(F.q())), lams[static_cast<size_t>(d)]));
        block[t] = acc;
      }
      for (int i = 0; i < n; ++i) {
        if (col[static_cast<size_t>(i)] == 0) continue;
        for (size_t t = 0; t < rest; ++t)
          e.a[static_cast<size_t>(i) * rest + t] =
              F.add(e.a[static_cast<size_t>(i) * rest + t],
                    F.scal(col[static_cast<size_t>(i)], block[t]));
      }
    }
    WeightReport rep = weights(F, e);
    if (rep.fibre_weight == tau && rep.slice_weights[0] <= sigma &&
        *std::min_element(rep.slice_weights.begin(), rep.slice_weights.end()) <= sigma)
      return e;
  }
}

Word sample_fibre_weight_error(const CodeSpec& spec, int tau, Rng& rng) {
  const ExtField& F = *spec.field;
  const int n = static_cast<int>(F.n());
  if (tau == 0) return Word::zeros(spec.m, n);
  while (true) {
    std::vector<FF> lams = random_independent(F, tau, rng);
    Word e = Word::zeros(spec.m, n);
    for (auto& x : e.a) {
      FF acc = F.zero();
      for (int d = 0; d < tau; ++d)
        acc = F.add(acc, F.scal(static_cast<uint32_t>(rng.below(F.q())), lams[static_cast<size_t>(d)]));
      x = acc;
    }
    if (weights(F, e).fibre_weight == tau) return e;
  }
}

Word sample_trank_error(const CodeSpec& spec, int r, Rng& rng) {
  const ExtField& F = *spec.field;
  const int n = static_cast<int>(F.n());
  Word e = Word::zeros(spec.m, n);
  for (int t = 0; t < r; ++t) {
    // gamma * u_1 (x) ... (x) u_m with ground vectors u_j
    FF gamma = random_nonzero(F, rng);
    std::vector<std::vector<uint32_t>> us(static_cast<size_t>(spec.m));
    for (auto& u : us) {
      u.assign(static_cast<size_t>(n), 0);
      bool nonzero = false;
      while (!nonzero)
        for (auto& x : u) nonzero |= (x = static_cast<uint32_t>(rng.below(F.q()))) != 0;
    }
    std::vector<int> idx(static_cast<size_t>(spec.m), 0);
    do {
      uint32_t prod = 1;
      for (int j = 0; j < spec.m; ++j)
        prod = F.base().mul(prod, us[static_cast<size_t>(j)][static_cast<size_t>(idx[static_cast<size_t>(j)])]);
      if (prod != 0) e.at(idx) = F.add(e.at(idx), F.scal(prod, gamma));
    } while (next_index(idx, n));
  }
  return e;
}

Word sample_uniform_error(const CodeSpec& spec, Rng& rng) {
  Word e = Word::zeros(spec.m, static_cast<int>(spec.field->n()));
  for (auto& x : e.a) x = random_element(*spec.field, rng);
  return e;
}

}  // namespace rtc
