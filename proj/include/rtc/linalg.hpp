#pragma once

#include <optional>
#include <vector>

#include "rtc/ext_field.hpp"

namespace rtc {

/// Matrix over the ground field, row-major.
struct GMat {
  int rows = 0, cols = 0;
  std::vector<uint8_t> a;

  GMat() = default;
  GMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  friend bool operator==(const GMat&, const GMat&) = default;
};

FFMat ffmat_mul(const ExtField& F, const FFMat& A, const FFMat& B);
FFMat ffmat_transpose(const FFMat& A);
FFMat ffmat_identity(const ExtField& F, int n);
FFMat ffmat_inverse(const ExtField& F, const FFMat& A);
int ffmat_rank(const ExtField& F, FFMat A);

/// Reduced-echelon basis of the right nullspace {x : A x = 0}, one row per
/// basis vector, ordered by pivot position. Deterministic for a fixed A.
std::vector<std::vector<FF>> ffmat_nullspace(const ExtField& F, FFMat A);

GMat gmat_mul(const GroundField& K, const GMat& A, const GMat& B);
GMat gmat_transpose(const GMat& A);
int gmat_rank(const GroundField& K, GMat A);
std::vector<std::vector<uint8_t>> gmat_nullspace(const GroundField& K, GMat A);

enum class SolveStatus { kNone, kUnique, kMultiple };

/// Solves A x = b over the ground field; on kUnique fills x.
SolveStatus gmat_solve(const GroundField& K, GMat A, std::vector<uint8_t> b,
                       std::vector<uint8_t>& x);

/// GF(q)-rank of a family of extension-field elements.
int rank_fq(const ExtField& F, const std::vector<FF>& v);

/// Multiplies a word-like FF matrix by ground matrices on both sides: L * A * R.
FFMat ffmat_sandwich(const ExtField& F, const GMat& L, const FFMat& A, const GMat& R);

}  // namespace rtc
