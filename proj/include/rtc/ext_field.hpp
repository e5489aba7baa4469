#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "rtc/ground_field.hpp"

namespace rtc {

/// Element of GF(q^n): coefficient vector over the ground field in the power
/// basis of the extension modulus, constant coefficient first. The unused
/// tail is kept zero so that equality and hashing are representation-free.
struct FF {
  static constexpr int kMaxDegree = 16;
  std::array<uint8_t, kMaxDegree> c{};

  friend bool operator==(const FF&, const FF&) = default;
  friend auto operator<=>(const FF&, const FF&) = default;
};

struct FFHash {
  size_t operator()(const FF& x) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (int i = 0; i < FF::kMaxDegree; ++i) {
      h ^= x.c[i];
      h *= 0x100000001b3ull;
    }
    return static_cast<size_t>(h);
  }
};

/// GF(q^n) as a degree-n extension of a ground field GF(q); q itself may be
/// a prime power, in which case the tower has two levels. All operations are
/// const and the object is immutable after construction.
class ExtField {
 public:
  ExtField(GroundField base, uint32_t n, std::vector<uint32_t> modulus);

  /// GF(q^n) with lexicographically least irreducible moduli at both levels.
  static ExtField make(uint32_t q, uint32_t n);

  uint32_t n() const { return n_; }
  uint32_t q() const { return base_.q(); }
  const GroundField& base() const { return base_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FF zero() const { return FF{}; }
  FF one() const;
  FF gen() const;  // residue class of x
  bool is_zero(const FF& x) const { return x == FF{}; }

  FF from_ground(GroundField::Elem v) const;
  FF from_coeffs(const std::vector<uint32_t>& c) const;
  std::vector<uint32_t> coeffs(const FF& x) const;

  FF add(const FF& x, const FF& y) const;
  FF sub(const FF& x, const FF& y) const;
  FF neg(const FF& x) const;
  FF mul(const FF& x, const FF& y) const;
  FF inv(const FF& x) const;
  FF div(const FF& x, const FF& y) const { return mul(x, inv(y)); }
  FF pow(FF x, uint64_t e) const;
  FF scal(GroundField::Elem c, const FF& x) const;

  /// x -> x^(q^l); l may be any integer, reduced mod n.
  FF frobenius(const FF& x, int64_t l) const;
  /// y with y^(q^l) = x.
  FF inv_frobenius(const FF& x, int64_t l) const;

  /// Number of field elements as uint64 (q^n); requires q^n < 2^63.
  uint64_t order() const { return order_; }
  FF element_at(uint64_t idx) const;
  uint64_t index_of(const FF& x) const;

 private:
  GroundField base_;
  uint32_t n_;
  std::vector<uint32_t> modulus_;  // length n+1 over ground codes, monic
  uint64_t order_;
  // reduction_[i] = x^(n+i) mod modulus as a coefficient row, i in [0, n-1)
  std::vector<std::vector<uint8_t>> reduction_;
  // frob_[l] = matrix of x -> x^(q^l) in the power basis; column-major by
  // input coordinate: frob_[l][j*n + i] is coord i of (x^j)^(q^l)
  std::vector<std::vector<uint8_t>> frob_;
};

/// An ordered basis of GF(q^n) over GF(q), with its dual computed on demand.
struct FieldBasis {
  std::vector<FF> elems;
};

bool is_basis(const ExtField& F, const std::vector<FF>& elems);

/// k x n Moore matrix: row r is elementwise basis^(q^r), r = 0..k-1.
/// Matrices over FF are stored row-major as flat vectors.
struct FFMat {
  int rows = 0, cols = 0;
  std::vector<FF> a;

  FFMat() = default;
  FFMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  FF& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const FF& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  friend bool operator==(const FFMat&, const FFMat&) = default;
};

FFMat moore_matrix(const ExtField& F, const FieldBasis& basis, int k);
FieldBasis dual_basis(const ExtField& F, const FieldBasis& basis);
FieldBasis power_basis(const ExtField& F);

}  // namespace rtc
