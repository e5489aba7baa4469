#include "rtc/ground_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtc {

bool is_prime(uint32_t v) {
  if (v < 2) return false;
  for (uint32_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

namespace {

// Dense polynomial arithmetic over Z_p, coefficients constant-first.
using Poly = std::vector<uint32_t>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mod(Poly f, const Poly& m, uint32_t p) {
  f = trim(std::move(f));
  const size_t dm = m.size() - 1;
  while (f.size() > dm) {
    uint32_t lead = f.back() % p;
    size_t shift = f.size() - 1 - dm;
    if (lead != 0) {
      // modulus is monic
      for (size_t i = 0; i < m.size(); ++i) {
        uint32_t& c = f[shift + i];
        c = (c + p - (lead * m[i]) % p) % p;
      }
    }
    f.pop_back();
    f = trim(std::move(f));
    if (f.empty()) break;
  }
  return f;
}

Poly poly_mul_mod(const Poly& f, const Poly& g, const Poly& m, uint32_t p) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      r[i + j] = (r[i + j] + f[i] * g[j]) % p;
  return poly_mod(std::move(r), m, p);
}

bool has_nontrivial_factor(const Poly& m, uint32_t p) {
  // m is monic of degree a; trial division by all monic polynomials of
  // degree 1..a/2. Degrees here are tiny (p^a <= 256).
  size_t a = m.size() - 1;
  for (size_t d = 1; 2 * d <= a; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      g[d] = 1;
      uint64_t t = idx;
      for (size_t i = 0; i < d; ++i) {
        g[i] = static_cast<uint32_t>(t % p);
        t /= p;
      }
      if (poly_mod(m, g, p).empty()) return true;
    }
  }
  return false;
}

}  // namespace

GroundField::GroundField(uint32_t p) : p_(p), a_(1), q_(p), modulus_{0, 1} {
  if (!is_prime(p)) throw std::invalid_argument("ground field: p must be prime");
  if (q_ > 256) throw std::invalid_argument("ground field: order must be <= 256");
  build_tables();
}

GroundField::GroundField(uint32_t p, uint32_t a, std::vector<uint32_t> modulus)
    : p_(p), a_(a), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("ground field: p must be prime");
  if (a < 1) throw std::invalid_argument("ground field: degree must be >= 1");
  q_ = 1;
  for (uint32_t i = 0; i < a; ++i) {
    q_ *= p;
    if (q_ > 256) throw std::invalid_argument("ground field: order must be <= 256");
  }
  if (modulus_.size() != a + 1 || modulus_.back() % p != 1)
    throw std::invalid_argument("ground field: modulus must be monic of degree a");
  for (auto& c : modulus_) c %= p;
  if (a > 1 && has_nontrivial_factor(modulus_, p))
    throw std::invalid_argument("ground field: modulus is reducible");
  build_tables();
}

GroundField GroundField::make(uint32_t q) {
  for (uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    uint32_t a = 0, v = q;
    while (v % p == 0) {
      v /= p;
      ++a;
    }
    if (v != 1) break;  // not a prime power
    if (a == 1) return GroundField(p);
    // lexicographically least irreducible, coefficients compared from the
    // leading end down (constant term varies fastest)
    uint64_t count = 1;
    for (uint32_t i = 0; i < a; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      std::vector<uint32_t> m(a + 1, 0);
      m[a] = 1;
      uint64_t t = idx;
      for (uint32_t i = 0; i < a; ++i) {
        m[i] = static_cast<uint32_t>(t % p);
        t /= p;
      }
      if (!has_nontrivial_factor(m, p)) return GroundField(p, a, m);
    }
  }
  throw std::invalid_argument("ground field: q is not a prime power");
}

void GroundField::build_tables() {
  add_.assign(static_cast<size_t>(q_) * q_, 0);
  mul_.assign(static_cast<size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);

  auto decode = [&](Elem x) {
    Poly f;
    for (uint32_t i = 0; i < a_; ++i) {
      f.push_back(x % p_);
      x /= p_;
    }
    return trim(std::move(f));
  };
  auto encode = [&](const Poly& f) {
    Elem x = 0, w = 1;
    for (uint32_t i = 0; i < a_; ++i) {
      x += (i < f.size() ? f[i] : 0) * w;
      w *= p_;
    }
    return x;
  };

  for (Elem x = 0; x < q_; ++x) {
    Poly fx = decode(x);
    for (Elem y = 0; y < q_; ++y) {
      Poly fy = decode(y);
      Poly s(std::max(fx.size(), fy.size()), 0);
      for (size_t i = 0; i < s.size(); ++i)
        s[i] = ((i < fx.size() ? fx[i] : 0) + (i < fy.size() ? fy[i] : 0)) % p_;
      add_[x * q_ + y] = encode(trim(s));
      mul_[x * q_ + y] = encode(poly_mul_mod(fx, fy, modulus_, p_));
    }
  }
  for (Elem x = 0; x < q_; ++x) {
    for (Elem y = 0; y < q_; ++y)
      if (add_[x * q_ + y] == 0) neg_[x] = y;
  }
  for (Elem x = 1; x < q_; ++x) {
    for (Elem y = 1; y < q_; ++y)
      if (mul_[x * q_ + y] == 1) {
        inv_[x] = y;
        break;
      }
    if (inv_[x] == 0) throw std::logic_error("ground field: element without inverse");
  }
}

GroundField::Elem GroundField::inv(Elem x) const {
  if (x == 0) throw std::domain_error("ground field: inverse of zero");
  return inv_[x];
}

GroundField::Elem GroundField::pow(Elem x, uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

std::vector<uint32_t> GroundField::digits(Elem x) const {
  std::vector<uint32_t> d(a_);
  for (uint32_t i = 0; i < a_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

GroundField::Elem GroundField::from_digits(const std::vector<uint32_t>& d) const {
  Elem x = 0, w = 1;
  for (uint32_t i = 0; i < a_; ++i) {
    x += (i < d.size() ? d[i] % p_ : 0) * w;
    w *= p_;
  }
  return x;
}

}  // namespace rtc
