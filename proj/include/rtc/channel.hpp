#pragma once

#include <cstdint>

#include "rtc/tensor_code.hpp"

namespace rtc {

/// splitmix64: the 64-bit state advances by the golden-ratio increment and
/// the output is the finalised mix. Portable and identical on every
/// platform; bounded draws use plain modular reduction.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

  /// Independent stream for trial i; keeps parallel trials reproducible.
  Rng fork(uint64_t i) const { return Rng(state ^ (0x632be59bd9b4e019ull * (i + 1))); }
};

FF random_element(const ExtField& F, Rng& rng);
FF random_nonzero(const ExtField& F, Rng& rng);

/// Random message with support inside S.
MultilinPoly random_message(const CodeSpec& spec, Rng& rng);

/// Vector of length n over GF(q^n) whose GF(q)-rank is exactly r.
std::vector<FF> random_vector_rank(const ExtField& F, int r, Rng& rng);

/// Error whose mode-j fibres (1-based j) all have rank <= radius, with at
/// least one fibre hitting the radius exactly.
Word sample_fibre_rank_error(const CodeSpec& spec, int j, int radius, Rng& rng);

/// Order-2 error with >= jsize columns of rank <= radius, remaining columns
/// uniform (the two-pass decoder's criterion).
Word sample_subset_j_error(const CodeSpec& spec, int jsize, int radius, Rng& rng);

/// Order-2 criterion of the mode-pair pass (j1, j2): for every slice over
/// the remaining modes, at least jsize mode-j2 indices whose mode-j1 fibres
/// have rank <= radius.
Word sample_pairwise_error(const CodeSpec& spec, int j1, int j2, int jsize, int radius, Rng& rng);

/// Error with w_{S,1} <= sigma and fibre weight exactly tau; re-verified
/// against the metrics module before returning.
Word sample_slice_fibre_error(const CodeSpec& spec, int sigma, int tau, Rng& rng);

/// Error with fibre weight exactly tau and unconstrained slice structure.
Word sample_fibre_weight_error(const CodeSpec& spec, int tau, Rng& rng);

/// Sum of r random elementary tensors; tensor rank <= r by construction.
Word sample_trank_error(const CodeSpec& spec, int r, Rng& rng);

/// Uniform entries.
Word sample_uniform_error(const CodeSpec& spec, Rng& rng);

}  // namespace rtc
