#pragma once

#include <map>
#include <string>

#include "rtc/tensor_code.hpp"

namespace rtc {

enum class DecodeStatus { kDecoded, kFailure };

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::kFailure;
  Word codeword;        // valid on success
  MultilinPoly message;  // valid on success
  Word error;            // received - codeword, valid on success
  Word candidate;        // fibre-wise passes: final word even when it fails
  std::map<std::string, long> diagnostics;

  bool ok() const { return status == DecodeStatus::kDecoded; }
};

struct GabResult {
  std::vector<FF> codeword;
  bool success = false;
};

/// Bounded-distance Gabidulin decoder for G_k(alpha): returns the unique
/// codeword within rank distance floor((n-k)/2) of r when one exists, with
/// success set; otherwise returns r unchanged with success cleared.
/// Implemented by interpolation (V, N) with V(r_i) = N(alpha_i), left
/// factoring N = V(f), and a rank post-check on the residual.
GabResult gab_dec(const ExtField& F, const FieldBasis& alpha, const std::vector<FF>& r, int k);

/// Interpolation system of the radical decoders: V of q-degree <= t and N
/// supported on S + [0, t] with V(R[i]) = N(alpha_{i_1}, ..., alpha_{i_m}).
struct LinearisedSystem {
  int t = 0;
  std::vector<MultiExp> support_n;            // unknown order after v_0..v_t
  std::vector<std::vector<FF>> nullspace;     // reduced-echelon basis rows
};

LinearisedSystem solve_linearised(const CodeSpec& spec, const Word& R, int t);

/// Fibre-wise decoding along mode j (1-based): j = 1 decodes columns of an
/// order-2 word, j = 2 decodes rows.
DecodeOutcome decode_fibrewise(const CodeSpec& spec, const Word& R, int j);

/// Column pass then row pass (or the reverse); box supports only.
DecodeOutcome decode_twoway(const CodeSpec& spec, const Word& R, bool column_first = true);

/// All modes in order 1..m, each pass fibre-wise.
DecodeOutcome decode_allmodes(const CodeSpec& spec, const Word& R);

/// Radical decoding at a caller-fixed fibre-weight budget t.
DecodeOutcome decode_radical_fixed(const CodeSpec& spec, const Word& R, int t);

/// Radical decoding with the minimal-degree search: solves once at
/// t = n - mu - 2 and finds the least delta whose constrained solution
/// space is nonzero; the found delta is reported as diagnostics["delta"].
DecodeOutcome decode_radical(const CodeSpec& spec, const Word& R);

/// Supercode decoding: derives the error locator kernel K from one solution
/// and solves for an error with entries in K and R - E in the code over
/// GF(q); fails when the affine system is not uniquely solvable.
DecodeOutcome decode_supercode(const CodeSpec& spec, const Word& R, int t);

}  // namespace rtc
