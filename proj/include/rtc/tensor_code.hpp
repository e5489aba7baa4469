#pragma once

#include <memory>
#include <vector>

#include "rtc/linalg.hpp"
#include "rtc/qpoly.hpp"

namespace rtc {

/// Order-m word: an n x ... x n array over GF(q^n), stored flat in row-major
/// order with the last index fastest. Indices are 0-based internally.
struct Word {
  int m = 0, n = 0;
  std::vector<FF> a;

  static Word zeros(int m, int n);
  size_t size() const { return a.size(); }
  size_t flat(const std::vector<int>& idx) const;
  FF& at(const std::vector<int>& idx) { return a[flat(idx)]; }
  const FF& at(const std::vector<int>& idx) const { return a[flat(idx)]; }
  FF& at2(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const FF& at2(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  friend bool operator==(const Word&, const Word&) = default;
};

Word word_add(const ExtField& F, const Word& x, const Word& y);
Word word_sub(const ExtField& F, const Word& x, const Word& y);

/// Advances a mixed-radix index over [0,n)^m; returns false after the last.
bool next_index(std::vector<int>& idx, int n);

/// The j-th mode fibre through the given base point (0-based j).
std::vector<FF> mode_fibre(const Word& w, int j, const std::vector<int>& base);
void set_mode_fibre(Word& w, int j, const std::vector<int>& base, const std::vector<FF>& fibre);

/// (m+1)-dimensional array over the ground field.
struct GroundTensor {
  std::vector<int> dims;
  std::vector<uint8_t> a;

  static GroundTensor zeros(std::vector<int> dims);
  size_t flat(const std::vector<int>& idx) const;
  uint8_t& at(const std::vector<int>& idx) { return a[flat(idx)]; }
  uint8_t at(const std::vector<int>& idx) const { return a[flat(idx)]; }
  friend bool operator==(const GroundTensor&, const GroundTensor&) = default;
};

/// Code C_alpha(S) of order m over GF(q^n).
struct CodeSpec {
  std::shared_ptr<const ExtField> field;
  FieldBasis alpha;
  int m = 2;
  SupportSet support;
  // derived at construction
  FieldBasis alpha_dual;
  FFMat moore;       // n x n Moore matrix of alpha
  FFMat moore_dual;  // n x n Moore matrix of the dual basis
};

CodeSpec make_code_spec(std::shared_ptr<const ExtField> field, FieldBasis alpha, SupportSet S);

/// Word[i] = f(alpha_{i_1}, ..., alpha_{i_m}); requires Supp(f) within S.
Word encode(const CodeSpec& spec, const MultilinPoly& message);

/// Unique f with support in [0,n-1]^m evaluating to w (no code membership
/// requirement); inverse of the evaluation isomorphism.
MultilinPoly interpolate(const CodeSpec& spec, const Word& w);

/// Inverse of encode; throws std::domain_error when w is not a codeword.
MultilinPoly decode_to_message(const CodeSpec& spec, const Word& w);

bool membership(const CodeSpec& spec, const Word& w);

/// True iff v is a codeword of the k-dimensional Gabidulin code at alpha.
bool gabidulin_membership(const CodeSpec& spec, const std::vector<FF>& v, int k);

/// Dual code over the dual basis with complementary support (order 2 only).
CodeSpec dual_code(const CodeSpec& spec);

struct SupportTranslation {
  CodeSpec code;
  GMat left;   // L with L * C * R ranging over the translated code
  GMat right;  // R
};

/// Coordinatewise support shift (s + r mod n) with explicit change-of-basis
/// matrices over GF(q) (order 2 only).
SupportTranslation translate_support(const CodeSpec& spec, int r1, int r2);

GroundTensor ground_tensor(const ExtField& F, const Word& w, const FieldBasis& omega);
Word from_ground(const ExtField& F, const GroundTensor& g, const FieldBasis& omega);

enum class EmbedVariant { kRows, kCols, kBoth, kIso3 };

/// Interleaving embeddings of order-2 codewords into stacked fibre matrices.
FFMat interleave_embed(const CodeSpec& spec, const Word& w, EmbedVariant variant);

}  // namespace rtc
