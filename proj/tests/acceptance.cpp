// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its runtime budget in seconds.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rtc/channel.hpp"
#include "rtc/counting.hpp"
#include "rtc/decoders.hpp"
#include "rtc/io.hpp"
#include "rtc/metrics.hpp"

using namespace rtc;

namespace {

struct Harness {
  int failures = 0;

  void run(int id, const std::string& name, double budget_s, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
      ok = body();
    } catch (const std::exception& e) {
      err = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
      ok = false;
      err += (err.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("criterion %2d %-52s %s (%.2fs/%gs)%s%s\n", id, name.c_str(),
                ok ? "PASS" : "FAIL", secs, budget_s, err.empty() ? "" : " -- ", err.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

std::shared_ptr<const ExtField> make_field(uint32_t q, uint32_t n) {
  return std::make_shared<const ExtField>(ExtField::make(q, n));
}

CodeSpec box_spec(uint32_t q, uint32_t n, std::vector<int> mu) {
  auto F = make_field(q, n);
  return make_code_spec(F, power_basis(*F), support_box(std::move(mu)));
}

// --- criterion 1: GF(8) golden encode/decode -------------------------------

bool criterion_gf8_golden() {
  auto F = make_field(2, 3);
  if (F->modulus() != std::vector<uint32_t>{1, 1, 0, 1}) return false;  // b^3 = b + 1
  FF b = F->gen();
  FF a = F->pow(b, 3);
  FieldBasis alpha{{a, F->pow(a, 2), F->pow(a, 4)}};
  CodeSpec spec = make_code_spec(F, alpha, support_box({1, 2}));

  MultilinPoly f = ml_zero(2);
  f.coeffs[{1, 2}] = a;
  f.coeffs[{0, 1}] = F->one();
  f.coeffs[{1, 0}] = F->mul(a, a);

  Word C = encode(spec, f);
  auto P = [&](int e) { return F->pow(b, static_cast<uint64_t>(e)); };
  const FF expect[3][3] = {{P(5), P(3), P(2)}, {P(3), P(3), F->one()}, {P(5), P(6), P(2)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(C.at2(i, j) == expect[i][j])) return false;
  return decode_to_message(spec, C) == f;
}

// --- criterion 2: GF(9) weight and rank goldens ----------------------------

bool criterion_gf9_weights() {
  auto F = make_field(3, 2);
  FieldBasis omega = power_basis(*F);
  const FF w1 = omega.elems[0], w2 = omega.elems[1];

  Word m1 = Word::zeros(2, 2), m2 = Word::zeros(2, 2), m3 = Word::zeros(2, 2);
  m1.at2(0, 0) = F->sub(w1, w2);
  m1.at2(0, 1) = F->sub(w2, w1);
  m1.at2(1, 0) = F->sub(w1, w2);
  m1.at2(1, 1) = F->sub(w2, w1);
  m2.at2(0, 0) = F->add(w1, w2);
  m2.at2(0, 1) = F->add(w1, w2);
  m2.at2(1, 0) = w2;
  m2.at2(1, 1) = w2;
  m3.at2(0, 0) = w1;
  m3.at2(0, 1) = w2;
  m3.at2(1, 1) = w1;

  WeightReport r1 = weights(*F, m1), r2 = weights(*F, m2), r3 = weights(*F, m3);
  if (!(r1.slice_weights == std::vector<int>{1, 1} && r1.fibre_weight == 1)) return false;
  if (!(r2.slice_weights == std::vector<int>{2, 1} && r2.fibre_weight == 2)) return false;
  if (!(r3.slice_weights == std::vector<int>{2, 2} && r3.fibre_weight == 2)) return false;
  return tensor_rank_exact(F->base(), ground_tensor(*F, m1, omega)) == 1 &&
         tensor_rank_exact(F->base(), ground_tensor(*F, m2, omega)) == 2 &&
         tensor_rank_exact(F->base(), ground_tensor(*F, m3, omega)) == 3;
}

// --- criterion 3: error-count ratio reproduction ---------------------------

bool criterion_ratio_grid() {
  auto [n1, n2] = alg_error_lowerbounds(2, 10, 5, 5);
  double ratio = log10_big(n2) - log10_big(n1);
  if (std::abs(ratio - 39.3) > 0.1) return false;
  for (int mu1 = 1; mu1 <= 8; ++mu1)
    for (int mu2 = 1; mu2 <= 8; ++mu2) {
      auto [a, b] = alg_error_lowerbounds(2, 10, mu1, mu2);
      if (a > b) return false;
    }
  return true;
}

// --- criterion 4: worked example at q = 3, n = 5, mu = 2 -------------------

bool criterion_worked_example() {
  CodeSpec spec = box_spec(3, 5, {2, 2});
  const auto& a = spec.alpha.elems;
  Word e1 = Word::zeros(2, 5), e2 = Word::zeros(2, 5);
  for (int j = 0; j < 5; ++j) {
    e1.at2(0, j) = a[static_cast<size_t>(j)];
    e2.at2(0, j) = a[static_cast<size_t>(j)];
  }
  for (int i = 1; i < 5; ++i) {
    e1.at2(i, 0) = a[0];
    e1.at2(i, 1) = a[1];
    e1.at2(i, 4) = a[4];
    e2.at2(i, 0) = a[0];
    e2.at2(i, 1) = a[1];
    e2.at2(i, 4) = a[static_cast<size_t>(4 - i)];
  }
  Word zero = Word::zeros(2, 5);

  DecodeOutcome col = decode_fibrewise(spec, e1, 1);
  if (!(col.ok() && col.codeword == zero)) return false;
  DecodeOutcome two = decode_twoway(spec, e2, true);
  if (!(two.ok() && two.codeword == zero)) return false;
  DecodeOutcome rev = decode_twoway(spec, e2, false);
  if (rev.ok() && rev.codeword == zero) return false;
  return true;
}

// --- criterion 5: counting formulas vs exhaustive enumeration --------------

bool criterion_counting() {
  for (auto [q, k, m, n] :
       {std::tuple{2u, 2, 2, 2}, {2u, 2, 2, 3}, {2u, 2, 3, 3}, {3u, 2, 2, 2}}) {
    auto [c1, c2] = oracles::census_rank12(q, k, m, n);
    if (count_trank1(q, k, m, n) != c1) return false;
    if (count_trank2(q, k, m, n) != c2) return false;
  }
  for (uint32_t q : {2u, 3u})
    if (roth_trank2_count(q, 2) != count_trank2(q, 2, 2, 2) + count_trank1(q, 2, 2, 2) + 1)
      return false;
  return true;
}

// --- criterion 6: worst-case decoder suites --------------------------------

bool criterion_worst_case_suites() {
  const int kTrials = 300;
  for (auto [q, n, mu] : {std::tuple{2u, 6u, 1}, {2u, 8u, 2}, {3u, 5u, 1}}) {
    CodeSpec spec = box_spec(q, n, {mu, mu});
    const ExtField& F = *spec.field;
    const int nn = static_cast<int>(n);
    const int radius = (nn - mu - 1) / 2;
    const int jsize = (nn + mu + 2) / 2;
    Rng rng(0x5eedULL * q + 7919ULL * n + static_cast<uint64_t>(mu));

    for (int trial = 0; trial < kTrials; ++trial) {
      Word c = encode(spec, random_message(spec, rng));
      Word e = sample_fibre_rank_error(spec, 1, radius, rng);
      DecodeOutcome out = decode_fibrewise(spec, word_add(F, c, e), 1);
      if (!(out.ok() && out.codeword == c)) return false;
    }
    for (int trial = 0; trial < kTrials; ++trial) {
      Word c = encode(spec, random_message(spec, rng));
      Word e = sample_subset_j_error(spec, jsize, radius, rng);
      DecodeOutcome out = decode_twoway(spec, word_add(F, c, e));
      if (!(out.ok() && out.codeword == c)) return false;
    }
    for (int trial = 0; trial < kTrials; ++trial) {
      int t = 1 + trial % (nn - mu - 2);  // exercise every admissible t
      int sigma = nn - mu - 1 - t;
      Word c = encode(spec, random_message(spec, rng));
      Word e = sample_slice_fibre_error(spec, sigma, t, rng);
      DecodeOutcome out = decode_radical_fixed(spec, word_add(F, c, e), t);
      if (!(out.ok() && out.codeword == c)) return false;
    }
    for (int trial = 0; trial < kTrials; ++trial) {
      int tau = 1 + trial % (nn - mu - 2);
      int sigma = nn - mu - 1 - tau;
      Word c = encode(spec, random_message(spec, rng));
      Word e = sample_slice_fibre_error(spec, sigma, tau, rng);
      DecodeOutcome out = decode_radical(spec, word_add(F, c, e));
      if (!(out.ok() && out.codeword == c)) return false;
      if (out.diagnostics.at("delta") != weights(F, e).fibre_weight) return false;
    }
  }
  return true;
}

// --- criterion 7: factoring round-trip against the diagonal oracle ---------

bool criterion_factoring() {
  Rng rng(0xFAC7);
  int done = 0;
  while (done < 500) {
    for (auto [q, n] : {std::pair{2u, 5u}, {3u, 3u}}) {
      ExtField F = ExtField::make(q, n);
      for (int m : {2, 3}) {
        int mu = static_cast<int>(rng.below(3));
        SupportSet S = support_box(std::vector<int>(static_cast<size_t>(m), mu));
        LinPoly V;
        for (int l = 0; l <= 2; ++l) {
          FF c = random_element(F, rng);
          if (!F.is_zero(c)) V.coeffs[l] = c;
        }
        if (V.is_zero()) V.coeffs[0] = F.one();
        MultilinPoly f = ml_zero(m);
        for (const auto& s : S.points) {
          FF c = random_element(F, rng);
          if (!F.is_zero(c)) f.coeffs[s] = c;
        }
        MultilinPoly N = compose_left(F, V, f);
        auto got = factor_left(F, V, N, S);
        if (!got || !(*got == f)) return false;
        auto oracle = oracles::factor_by_diagonals(F, V, N, S);
        if (!oracle || !(*oracle == f)) return false;
        ++done;
      }
    }
  }
  return true;
}

// --- criterion 8: weight/rank inequalities ---------------------------------

bool criterion_weight_inequalities() {
  {
    auto F = make_field(2, 2);
    FieldBasis omega = power_basis(*F);
    GroundTensor g = GroundTensor::zeros({2, 2, 2});
    for (uint32_t bits = 0; bits < 256; ++bits) {
      for (size_t t = 0; t < 8; ++t) g.a[t] = (bits >> t) & 1;
      if (!verify_weight_bounds(*F, from_ground(*F, g, omega), omega)) return false;
    }
  }
  {
    auto F = make_field(2, 3);
    FieldBasis omega = power_basis(*F);
    CodeSpec spec = make_code_spec(F, omega, support_box({2, 2}));
    Rng rng(0xACC8);
    for (int trial = 0; trial < 1000; ++trial)
      if (!verify_weight_bounds(*F, sample_uniform_error(spec, rng), omega)) return false;
  }
  return true;
}

// --- criterion 9: duality ---------------------------------------------------

bool criterion_duality() {
  Rng rng(0xD0A1);
  for (uint32_t n : {3u, 4u}) {
    auto F = make_field(2, n);
    for (int trial = 0; trial < 25; ++trial) {
      SupportSet S;
      S.m = 2;
      while (S.points.empty() || S.points.size() == n * n) {
        S.points.clear();
        for (int x = 0; x < static_cast<int>(n); ++x)
          for (int y = 0; y < static_cast<int>(n); ++y)
            if (rng.below(2)) S.points.insert({x, y});
      }
      CodeSpec spec = make_code_spec(F, power_basis(*F), S);
      CodeSpec dual = dual_code(spec);
      if (spec.support.points.size() + dual.support.points.size() != n * n) return false;
      for (const auto& s : spec.support.points)
        for (const auto& r : dual.support.points) {
          Word c = encode(spec, ml_monomial(2, s, F->one()));
          Word d = encode(dual, ml_monomial(2, r, F->one()));
          FF tr = F->zero();
          for (size_t t = 0; t < c.a.size(); ++t) tr = F->add(tr, F->mul(c.a[t], d.a[t]));
          if (!F->is_zero(tr)) return false;
        }
    }
  }
  return true;
}

// --- criterion 10: order-3 suites -------------------------------------------

bool criterion_order3() {
  CodeSpec spec = box_spec(2, 5, {1, 1, 1});
  const ExtField& F = *spec.field;
  const int n = 5, mu = 1;
  const int radius = (n - mu - 1) / 2;
  Rng rng(0x03D3);

  for (int trial = 0; trial < 100; ++trial) {
    Word c = encode(spec, random_message(spec, rng));
    Word e = sample_fibre_rank_error(spec, 1, radius, rng);
    DecodeOutcome out = decode_fibrewise(spec, word_add(F, c, e), 1);
    if (!(out.ok() && out.codeword == c)) return false;
  }
  const int jsize = (n + mu + 2) / 2;
  for (int trial = 0; trial < 100; ++trial) {
    Word c = encode(spec, random_message(spec, rng));
    Word e = sample_pairwise_error(spec, 1, 2, jsize, radius, rng);
    DecodeOutcome out = decode_allmodes(spec, word_add(F, c, e));
    if (!(out.ok() && out.codeword == c)) return false;
  }
  for (int trial = 0; trial < 100; ++trial) {
    int tau = 1 + trial % (n - mu - 2);
    int sigma = n - mu - 1 - tau;
    Word c = encode(spec, random_message(spec, rng));
    Word e = sample_slice_fibre_error(spec, sigma, tau, rng);
    DecodeOutcome out = decode_radical(spec, word_add(F, c, e));
    if (!(out.ok() && out.codeword == c)) return false;
  }

  // structured pattern: entries alpha_{i1} on the first a = n - mu - 2 slabs
  const int a = n - mu - 2;
  Word e2 = Word::zeros(3, n);
  std::vector<int> idx(3, 0);
  do {
    if (idx[0] < a) e2.at(idx) = spec.alpha.elems[static_cast<size_t>(idx[0])];
  } while (next_index(idx, n));
  Word c = encode(spec, random_message(spec, rng));
  DecodeOutcome out = decode_radical(spec, word_add(F, c, e2));
  return out.ok() && out.codeword == c;
}

// --- criterion 11: supercode success-rate floor -----------------------------

bool criterion_supercode(double* rate_out) {
  CodeSpec spec = box_spec(2, 8, {2, 2});
  const ExtField& F = *spec.field;
  const int n = 8, mu = 2, t = 5;
  Rng rng(0x5C0DE);
  int success = 0;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    Word c = encode(spec, random_message(spec, rng));
    Word e = sample_fibre_weight_error(spec, n - mu - 1, rng);
    DecodeOutcome out = decode_supercode(spec, word_add(F, c, e), t);
    if (out.ok() && out.codeword == c) ++success;
  }
  *rate_out = static_cast<double>(success) / trials;
  return *rate_out > 0.5;
}

// --- criterion 12: bench determinism ----------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool criterion_bench_determinism() {
  std::string dir = "/tmp/rtc_accept_XXXXXX";
  std::vector<char> buf(dir.begin(), dir.end());
  buf.push_back('\0');
  if (!mkdtemp(buf.data())) return false;
  dir.assign(buf.data());
  std::string cli = RTC_CLI_PATH;

  auto sh = [&](const std::string& cmd) { return WEXITSTATUS(std::system(cmd.c_str())); };
  if (sh(cli + " gen --q 2 --n 6 --m 2 --mu 1 --out " + dir + "/spec.txt > /dev/null") != 0)
    return false;
  std::string bench = cli + " bench --code " + dir +
                      "/spec.txt --alg radical --model slice-fibre --sigma 2 --tau 2 "
                      "--trials 50 --seed 424242 > ";
  if (sh(bench + dir + "/b1.csv") != 0) return false;
  if (sh(bench + dir + "/b2.csv") != 0) return false;
  std::string c1 = slurp(dir + "/b1.csv");
  return !c1.empty() && c1 == slurp(dir + "/b2.csv");
}

}  // namespace

int main() {
  Harness h;
  h.run(1, "GF(8) golden encode/decode", 1, criterion_gf8_golden);
  h.run(2, "GF(9) weight and tensor-rank goldens", 5, criterion_gf9_weights);
  h.run(3, "error-count ratio 39.3 and 8x8 grid", 10, criterion_ratio_grid);
  h.run(4, "q=3 n=5 worked decoding example", 10, criterion_worked_example);
  h.run(5, "counting formulas vs exhaustive census", 300, criterion_counting);
  h.run(6, "worst-case decoder suites (300 trials each)", 300, criterion_worst_case_suites);
  h.run(7, "factoring round-trip + diagonal oracle (500)", 60, criterion_factoring);
  h.run(8, "weight/rank inequality suites", 120, criterion_weight_inequalities);
  h.run(9, "duality orthogonality and dimensions", 60, criterion_duality);
  h.run(10, "order-3 decoder suites (100 trials each)", 300, criterion_order3);
  double rate = 0;
  h.run(11, "supercode success-rate floor", 120, [&] { return criterion_supercode(&rate); });
  std::printf("             supercode measured success rate: %.3f\n", rate);
  h.run(12, "bench CSV determinism", 60, criterion_bench_determinism);

  if (h.failures) {
    std::printf("%d criterion(s) FAILED\n", h.failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
