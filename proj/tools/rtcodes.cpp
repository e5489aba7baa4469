// Command-line front end: code generation, encoding, channel simulation,
// decoding, weight reports and counting statistics.
#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "rtc/channel.hpp"
#include "rtc/counting.hpp"
#include "rtc/decoders.hpp"
#include "rtc/io.hpp"
#include "rtc/metrics.hpp"

using namespace rtc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDecodeFailure = 2;
constexpr int kExitDataError = 3;

struct ChannelOptions {
  std::string model = "col-rank";
  int radius = 1;
  int jsize = -1;
  int sigma = 1;
  int tau = 1;
  int trank = 1;
  uint64_t seed = 1;
};

void add_channel_options(CLI::App* cmd, ChannelOptions& ch) {
  cmd->add_option("--model", ch.model, "error model")
      ->check(CLI::IsMember(
          {"col-rank", "row-rank", "subsetJ", "slice-fibre", "trank", "uniform-entry"}));
  cmd->add_option("--radius", ch.radius, "per-fibre rank budget");
  cmd->add_option("--jsize", ch.jsize, "number of good columns for subsetJ");
  cmd->add_option("--sigma", ch.sigma, "slice weight budget for slice-fibre");
  cmd->add_option("--tau", ch.tau, "fibre weight for slice-fibre");
  cmd->add_option("--trank", ch.trank, "number of elementary tensors");
  cmd->add_option("--seed", ch.seed, "channel seed");
}

Word sample_error(const CodeSpec& spec, const ChannelOptions& ch, Rng& rng) {
  if (ch.model == "col-rank") return sample_fibre_rank_error(spec, 1, ch.radius, rng);
  if (ch.model == "row-rank") return sample_fibre_rank_error(spec, 2, ch.radius, rng);
  if (ch.model == "subsetJ") {
    int jsize = ch.jsize;
    if (jsize < 0) {
      const int n = static_cast<int>(spec.field->n());
      const int mu2 = spec.support.max_coord(spec.m - 1);
      jsize = (n + mu2 + 2) / 2;
    }
    return sample_subset_j_error(spec, jsize, ch.radius, rng);
  }
  if (ch.model == "slice-fibre") return sample_slice_fibre_error(spec, ch.sigma, ch.tau, rng);
  if (ch.model == "trank") return sample_trank_error(spec, ch.trank, rng);
  return sample_uniform_error(spec, rng);
}

DecodeOutcome run_decoder(const CodeSpec& spec, const Word& r, const std::string& alg, int t,
                          int mode) {
  if (alg == "col") return decode_fibrewise(spec, r, 1);
  if (alg == "row") return decode_fibrewise(spec, r, 2);
  if (alg == "twoway") return decode_twoway(spec, r);
  if (alg == "radical" || alg == "radical-m") return decode_radical(spec, r);
  if (alg == "radical-fixed") return decode_radical_fixed(spec, r, t);
  if (alg == "supercode") return decode_supercode(spec, r, t);
  if (alg == "fibrewise-m") return decode_fibrewise(spec, r, mode);
  if (alg == "allmodes-m") return decode_allmodes(spec, r);
  throw std::invalid_argument("unknown algorithm: " + alg);
}

int cmd_gen(const std::string& out, uint32_t q, uint32_t n, int m, std::vector<int> mu,
            const std::string& support, const std::string& modulus, const std::string& basis) {
  std::ostringstream text;
  text << "q=" << q << "\n";
  text << "n=" << n << "\n";
  text << "m=" << m << "\n";
  if (!modulus.empty()) text << "modulus=" << modulus << "\n";
  if (!basis.empty()) text << "basis=" << basis << "\n";
  if (!support.empty()) {
    text << "support=" << support << "\n";
  } else {
    if (mu.empty()) throw ParseError("gen: give --mu or --support");
    if (mu.size() == 1) mu.assign(static_cast<size_t>(m), mu[0]);
    if (static_cast<int>(mu.size()) != m) throw ParseError("gen: --mu arity mismatch");
    SupportSet S = support_box(mu);
    text << "support=";
    bool first = true;
    for (const auto& s : S.points) {
      if (!first) text << ";";
      first = false;
      text << "(";
      for (size_t j = 0; j < s.size(); ++j) text << (j ? "," : "") << s[j];
      text << ")";
    }
    text << "\n";
  }
  // validate before writing, then emit the canonical form
  std::istringstream in(text.str());
  CodeSpec spec = parse_code_spec(in);
  std::string canonical = emit_code_spec(spec);
  if (out.empty())
    std::cout << canonical;
  else
    write_file(out, canonical);
  return kExitOk;
}

void print_stats_line(const std::map<std::string, long>& diag) {
  for (const auto& [k, v] : diag) std::cerr << k << "=" << v << "\n";
}

int cmd_selftest();

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evaluation tensor codes: encoding, channel models, decoding, statistics"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "write a code-spec file");
  uint32_t gq = 2, gn = 3;
  int gm = 2;
  std::vector<int> gmu;
  std::string gsupport, gmodulus, gbasis, gout;
  gen->add_option("--q", gq, "ground field order")->required();
  gen->add_option("--n", gn, "extension degree / side length")->required();
  gen->add_option("--m", gm, "word order");
  gen->add_option("--mu", gmu, "box support bound(s)");
  gen->add_option("--support", gsupport, "explicit support, e.g. (0,0);(0,1)");
  gen->add_option("--modulus", gmodulus, "field modulus, constant term first");
  gen->add_option("--basis", gbasis, "code basis rows, ';' separated");
  gen->add_option("--out", gout, "output file (default stdout)");

  // encode
  auto* enc = app.add_subcommand("encode", "encode a message file");
  std::string ecode, ein, eout;
  enc->add_option("--code", ecode)->required();
  enc->add_option("--in", ein)->required();
  enc->add_option("--out", eout)->required();

  // corrupt
  auto* cor = app.add_subcommand("corrupt", "add a sampled error to a word");
  std::string ccode, cin_, cout_;
  ChannelOptions cch;
  cor->add_option("--code", ccode)->required();
  cor->add_option("--in", cin_)->required();
  cor->add_option("--out", cout_)->required();
  add_channel_options(cor, cch);

  // decode
  auto* dec = app.add_subcommand("decode", "decode a received word");
  std::string dalg = "radical", dcode, din, dout, dmsg;
  int dt = 0, dmode = 1;
  dec->add_option("--alg", dalg)
      ->check(CLI::IsMember({"col", "row", "twoway", "radical", "radical-fixed", "supercode",
                             "fibrewise-m", "allmodes-m", "radical-m"}));
  dec->add_option("--code", dcode)->required();
  dec->add_option("--in", din)->required();
  dec->add_option("--out", dout, "write the decoded word here");
  dec->add_option("--message", dmsg, "write the decoded message polynomial here");
  dec->add_option("--t", dt, "fibre-weight budget for radical-fixed/supercode");
  dec->add_option("--mode", dmode, "mode for fibrewise-m");

  // weights
  auto* wts = app.add_subcommand("weights", "weight report of a word");
  std::string wcode, win;
  wts->add_option("--code", wcode)->required();
  wts->add_option("--in", win)->required();

  // trank
  auto* trk = app.add_subcommand("trank", "exact tensor rank of a word");
  std::string tcode, tin;
  trk->add_option("--code", tcode)->required();
  trk->add_option("--in", tin)->required();

  // stats
  auto* sts = app.add_subcommand("stats", "fibre-wise correctable-error bounds");
  uint32_t sq = 2, sn = 10;
  int smu1 = 5, smu2 = 5;
  bool sgrid = false;
  sts->add_option("--q", sq)->required();
  sts->add_option("--n", sn)->required();
  sts->add_option("--mu1", smu1);
  sts->add_option("--mu2", smu2);
  sts->add_flag("--figure3-grid", sgrid, "emit the full 8x8 grid over mu in [1,8]^2");

  // bench
  auto* ben = app.add_subcommand("bench", "Monte-Carlo decoding trials, CSV on stdout");
  std::string bcode, balg = "radical";
  ChannelOptions bch;
  int btrials = 100, bt = 0, bmode = 1;
  ben->add_option("--code", bcode)->required();
  ben->add_option("--alg", balg);
  ben->add_option("--trials", btrials);
  ben->add_option("--t", bt);
  ben->add_option("--mode", bmode);
  add_channel_options(ben, bch);

  // selftest
  app.add_subcommand("selftest", "run the built-in invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed())
      return cmd_gen(gout, gq, gn, gm, gmu, gsupport, gmodulus, gbasis);

    if (enc->parsed()) {
      CodeSpec spec = load_code_spec(ecode);
      MultilinPoly f = load_poly(ein, *spec.field, spec.m);
      Word c = encode(spec, f);
      write_file(eout, emit_word(c));
      return kExitOk;
    }

    if (cor->parsed()) {
      CodeSpec spec = load_code_spec(ccode);
      Word w = load_word(cin_, *spec.field);
      Rng rng(cch.seed);
      Word e = sample_error(spec, cch, rng);
      write_file(cout_, emit_word(word_add(*spec.field, w, e)));
      return kExitOk;
    }

    if (dec->parsed()) {
      CodeSpec spec = load_code_spec(dcode);
      Word r = load_word(din, *spec.field);
      DecodeOutcome out = run_decoder(spec, r, dalg, dt, dmode);
      print_stats_line(out.diagnostics);
      if (out.ok()) {
        if (!dout.empty()) write_file(dout, emit_word(out.codeword));
        if (!dmsg.empty()) write_file(dmsg, emit_poly(*spec.field, out.message) + "\n");
        return kExitOk;
      }
      std::cerr << "decoding failure\n";
      if (!dout.empty() && out.candidate.n != 0) write_file(dout, emit_word(out.candidate));
      return kExitDecodeFailure;
    }

    if (wts->parsed()) {
      CodeSpec spec = load_code_spec(wcode);
      Word w = load_word(win, *spec.field);
      WeightReport rep = weights(*spec.field, w);
      std::cout << "wF=" << rep.fibre_weight;
      for (size_t j = 0; j < rep.slice_weights.size(); ++j)
        std::cout << " wS" << (j + 1) << "=" << rep.slice_weights[j];
      for (size_t j = 0; j < rep.max_fibre_ranks.size(); ++j)
        std::cout << " maxrk" << (j + 1) << "=" << rep.max_fibre_ranks[j];
      std::cout << " wSigma=" << rep.sigma_slice << "\n";
      return kExitOk;
    }

    if (trk->parsed()) {
      CodeSpec spec = load_code_spec(tcode);
      Word w = load_word(tin, *spec.field);
      GroundTensor g = ground_tensor(*spec.field, w, spec.alpha);
      std::cout << "trank=" << tensor_rank_exact(spec.field->base(), g) << "\n";
      return kExitOk;
    }

    if (sts->parsed()) {
      std::cout << "mu1,mu2,log10_ratio\n";
      auto emit_row = [&](int m1, int m2) {
        auto [n1, n2] = alg_error_lowerbounds(sq, static_cast<int>(sn), m1, m2);
        double ratio = log10_big(n2) - log10_big(n1);
        std::cout << m1 << "," << m2 << "," << std::fixed << std::setprecision(3) << ratio
                  << "\n";
      };
      if (sgrid) {
        for (int m1 = 1; m1 <= 8; ++m1)
          for (int m2 = 1; m2 <= 8; ++m2) emit_row(m1, m2);
      } else {
        emit_row(smu1, smu2);
      }
      return kExitOk;
    }

    if (ben->parsed()) {
      CodeSpec spec = load_code_spec(bcode);
      Rng base(bch.seed);
      std::cout << "trial,seed,algorithm,model,success,delta\n";
      for (int trial = 0; trial < btrials; ++trial) {
        Rng rng = base.fork(static_cast<uint64_t>(trial));
        uint64_t trial_seed = rng.state;
        Word c = encode(spec, random_message(spec, rng));
        Word e = sample_error(spec, bch, rng);
        DecodeOutcome out = run_decoder(spec, word_add(*spec.field, c, e), balg, bt, bmode);
        bool success = out.ok() && out.codeword == c;
        long delta = out.diagnostics.count("delta") ? out.diagnostics.at("delta") : -1;
        std::cout << trial << "," << trial_seed << "," << balg << "," << bch.model << ","
                  << (success ? 1 : 0) << "," << delta << "\n";
      }
      return kExitOk;
    }

    return cmd_selftest();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

namespace {

int cmd_selftest() {
  int failures = 0;
  auto check = [&](bool ok, const char* what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  };

  try {
    Rng rng(12345);

    // field arithmetic round-trips
    {
      ExtField F = ExtField::make(3, 3);
      bool ok = true;
      for (int i = 0; i < 50; ++i) {
        FF x = random_nonzero(F, rng);
        ok = ok && F.mul(x, F.inv(x)) == F.one();
        ok = ok && F.frobenius(x, F.n()) == x;
      }
      check(ok, "field arithmetic");
    }

    // encode/decode round-trip
    auto F = std::make_shared<const ExtField>(ExtField::make(2, 5));
    CodeSpec spec = make_code_spec(F, power_basis(*F), support_box({1, 1}));
    {
      bool ok = true;
      for (int i = 0; i < 20; ++i) {
        MultilinPoly f = random_message(spec, rng);
        ok = ok && decode_to_message(spec, encode(spec, f)) == f;
      }
      check(ok, "encode/decode round-trip");
    }

    // decoder fixed points and a corrected error per family
    {
      Word c = encode(spec, random_message(spec, rng));
      bool ok = decode_fibrewise(spec, c, 1).codeword == c &&
                decode_twoway(spec, c).codeword == c && decode_radical(spec, c).codeword == c;
      Word e = sample_fibre_rank_error(spec, 1, 1, rng);
      ok = ok && decode_fibrewise(spec, word_add(*F, c, e), 1).codeword == c;
      Word e2 = sample_slice_fibre_error(spec, 1, 2, rng);
      ok = ok && decode_radical(spec, word_add(*F, c, e2)).codeword == c;
      check(ok, "decoders");
    }

    // sampler soundness
    {
      Word e = sample_slice_fibre_error(spec, 2, 1, rng);
      WeightReport rep = weights(*F, e);
      check(rep.fibre_weight == 1 && rep.slice_weights[0] <= 2, "error samplers");
    }

    // counting identities
    {
      bool ok = count_trank1(2, 2, 2, 2) == 27 && count_trank2(2, 2, 2, 2) == 162 &&
                roth_trank2_count(2, 2) == 190;
      auto [n1, n2] = alg_error_lowerbounds(2, 10, 5, 5);
      double ratio = log10_big(n2) - log10_big(n1);
      ok = ok && ratio > 39.2 && ratio < 39.4;
      check(ok, "counting formulas");
    }

    // weight machinery on the GF(9) trio
    {
      ExtField F9 = ExtField::make(3, 2);
      FieldBasis omega = power_basis(F9);
      Word m3 = Word::zeros(2, 2);
      m3.at2(0, 0) = omega.elems[0];
      m3.at2(0, 1) = omega.elems[1];
      m3.at2(1, 1) = omega.elems[0];
      check(tensor_rank_exact(F9.base(), ground_tensor(F9, m3, omega)) == 3, "tensor rank");
    }
  } catch (const std::exception& e) {
    std::cout << "FAIL exception: " << e.what() << "\n";
    ++failures;
  }

  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? kExitOk : kExitDataError;
}

}  // namespace
