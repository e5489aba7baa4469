#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rtc {

/// GF(p^a) for prime p and a >= 1, used as the ground field of the
/// extension tower. Elements are encoded as integers in [0, q): the base-p
/// digits of the code are the coefficients (constant digit first) of the
/// residue polynomial modulo the base modulus. For a == 1 this is Z_p.
///
/// Arithmetic is table-driven; tables are built once at construction from
/// polynomial arithmetic over Z_p. The order is capped at 256 so that
/// extension-field elements can store ground codes in single bytes.
class GroundField {
 public:
  using Elem = uint32_t;

  explicit GroundField(uint32_t p);
  GroundField(uint32_t p, uint32_t a, std::vector<uint32_t> modulus);

  // Builds GF(q) for a prime power q with the lexicographically least
  // monic irreducible base modulus (coefficients compared constant-first).
  static GroundField make(uint32_t q);

  uint32_t p() const { return p_; }
  uint32_t a() const { return a_; }
  uint32_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  Elem add(Elem x, Elem y) const { return add_[x * q_ + y]; }
  Elem sub(Elem x, Elem y) const { return add_[x * q_ + neg_[y]]; }
  Elem mul(Elem x, Elem y) const { return mul_[x * q_ + y]; }
  Elem neg(Elem x) const { return neg_[x]; }
  Elem inv(Elem x) const;
  Elem pow(Elem x, uint64_t e) const;

  std::vector<uint32_t> digits(Elem x) const;
  Elem from_digits(const std::vector<uint32_t>& d) const;

  bool operator==(const GroundField& o) const {
    return p_ == o.p_ && a_ == o.a_ && modulus_ == o.modulus_;
  }

 private:
  void build_tables();

  uint32_t p_ = 0;
  uint32_t a_ = 1;
  uint32_t q_ = 0;
  std::vector<uint32_t> modulus_;  // length a+1, constant term first, monic
  std::vector<Elem> add_, mul_;
  std::vector<Elem> neg_, inv_;
};

bool is_prime(uint32_t v);

}  // namespace rtc
