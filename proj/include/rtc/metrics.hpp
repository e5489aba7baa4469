#pragma once

#include <vector>

#include "rtc/tensor_code.hpp"

namespace rtc {

struct WeightReport {
  int fibre_weight = 0;                // w_{F,m+1}: GF(q)-span of all entries
  std::vector<int> slice_weights;      // w_{S,j} per mode, j = 1..m
  std::vector<int> max_fibre_ranks;    // max GF(q)-rank of a mode-j fibre
  int sigma_slice = 0;                 // fibre_weight + min_j slice_weights
};

WeightReport weights(const ExtField& F, const Word& w);

/// Exact tensor rank of an order-3 ground tensor by depth-first search over
/// sums of canonicalised rank-1 tensors, starting at the slice-space lower
/// bound. Feasibility gate: order 3, every dimension <= 3, q^maxdim <= 16.
int tensor_rank_exact(const GroundField& K, const GroundTensor& g);

/// Lower bound on the tensor rank: max dimension of the three slice spaces.
int trank_lower_bound(const GroundField& K, const GroundTensor& g);

/// Checks the weight/rank inequalities relating w to its ground tensor:
/// slice and fibre weights and per-fibre ranks all bounded by the exact
/// tensor rank, and slice-space dims of the tensor match the word weights.
bool verify_weight_bounds(const ExtField& F, const Word& w, const FieldBasis& omega);

/// Largest mu in [0, n-1] such that some translated triangle T_{x,y,mu}
/// misses S entirely; lower-bounds the minimum tensor-rank distance.
int trank_distance_bound(const SupportSet& S, int n);

enum class Metric { kFibre, kSlice1, kSlice2, kTrank };

/// Exact minimum weight over all nonzero codewords; gate q^(n|S|) <= 2^20.
int min_distance_bruteforce(const CodeSpec& spec, Metric metric);

}  // namespace rtc
