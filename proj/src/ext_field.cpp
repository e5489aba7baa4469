#include "rtc/ext_field.hpp"

#include <algorithm>
#include <stdexcept>

#include "rtc/linalg.hpp"

namespace rtc {

namespace {

using GPoly = std::vector<uint32_t>;  // dense, constant-first, ground codes

GPoly gtrim(GPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

GPoly gmod(const GroundField& K, GPoly f, const GPoly& m) {
  f = gtrim(std::move(f));
  const size_t dm = m.size() - 1;
  const uint32_t lead_inv = K.inv(m.back());
  while (f.size() > dm) {
    uint32_t lead = K.mul(f.back(), lead_inv);
    size_t shift = f.size() - 1 - dm;
    if (lead != 0)
      for (size_t i = 0; i < m.size(); ++i)
        f[shift + i] = K.sub(f[shift + i], K.mul(lead, m[i]));
    f.pop_back();
    f = gtrim(std::move(f));
    if (f.empty()) break;
  }
  return f;
}

GPoly gmul(const GroundField& K, const GPoly& f, const GPoly& g) {
  if (f.empty() || g.empty()) return {};
  GPoly r(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      r[i + j] = K.add(r[i + j], K.mul(f[i], g[j]));
  return r;
}

GPoly gmulmod(const GroundField& K, const GPoly& f, const GPoly& g, const GPoly& m) {
  return gmod(K, gmul(K, f, g), m);
}

GPoly gpowmod(const GroundField& K, GPoly x, uint64_t e, const GPoly& m) {
  GPoly r{1};
  x = gmod(K, std::move(x), m);
  while (e) {
    if (e & 1) r = gmulmod(K, r, x, m);
    x = gmulmod(K, x, x, m);
    e >>= 1;
  }
  return r;
}

GPoly ggcd(const GroundField& K, GPoly a, GPoly b) {
  a = gtrim(std::move(a));
  b = gtrim(std::move(b));
  while (!b.empty()) {
    GPoly r = gmod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f irreducible over GF(q) iff x^(q^n) == x mod f and, for each prime
// divisor d of n, gcd(x^(q^(n/d)) - x mod f, f) = 1.
bool irreducible(const GroundField& K, const GPoly& f) {
  const size_t n = f.size() - 1;
  if (n == 0) return false;
  GPoly x{0, 1};
  GPoly xqn = x;
  for (size_t i = 0; i < n; ++i) xqn = gpowmod(K, xqn, K.q(), f);
  if (gtrim(xqn) != gmod(K, x, f)) return false;
  size_t nn = n;
  for (size_t d = 2; d <= nn; ++d) {
    if (nn % d != 0) continue;
    while (nn % d == 0) nn /= d;
    GPoly y = x;
    for (size_t i = 0; i < n / d; ++i) y = gpowmod(K, y, K.q(), f);
    // y - x mod f
    GPoly diff = y;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = K.sub(diff[1], 1);
    GPoly g = ggcd(K, f, gtrim(std::move(diff)));
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

ExtField::ExtField(GroundField base, uint32_t n, std::vector<uint32_t> modulus)
    : base_(std::move(base)), n_(n), modulus_(std::move(modulus)) {
  if (n_ < 1 || n_ > FF::kMaxDegree)
    throw std::invalid_argument("ext field: extension degree out of range");
  if (modulus_.size() != n_ + 1)
    throw std::invalid_argument("ext field: modulus must have degree n");
  for (auto& c : modulus_)
    if (c >= base_.q()) throw std::invalid_argument("ext field: modulus coefficient out of range");
  if (modulus_.back() != 1) throw std::invalid_argument("ext field: modulus must be monic");
  if (n_ > 1 && !irreducible(base_, modulus_))
    throw std::invalid_argument("ext field: modulus is reducible");

  order_ = 1;
  for (uint32_t i = 0; i < n_; ++i) {
    if (order_ > (1ull << 62) / base_.q())
      throw std::invalid_argument("ext field: order too large");
    order_ *= base_.q();
  }

  // reduction rows for x^n .. x^(2n-2)
  reduction_.resize(n_ > 1 ? n_ - 1 : 0);
  GPoly xn(n_ + 1, 0);
  xn[n_] = 1;
  GPoly cur = gmod(base_, xn, modulus_);
  for (uint32_t i = 0; i + 1 < n_; ++i) {
    reduction_[i].assign(n_, 0);
    for (size_t j = 0; j < cur.size(); ++j) reduction_[i][j] = static_cast<uint8_t>(cur[j]);
    cur.insert(cur.begin(), 0);  // multiply by x
    cur = gmod(base_, cur, modulus_);
  }

  // Frobenius matrices: frob_[1] columns are coords of (x^j)^q; higher powers
  // by repeated application, frob_[0] = identity.
  frob_.assign(n_, std::vector<uint8_t>(static_cast<size_t>(n_) * n_, 0));
  for (uint32_t j = 0; j < n_; ++j) frob_[0][static_cast<size_t>(j) * n_ + j] = 1;
  if (n_ > 1) {
    for (uint32_t j = 0; j < n_; ++j) {
      GPoly xj(j + 1, 0);
      xj[j] = 1;
      GPoly im = gpowmod(base_, xj, base_.q(), modulus_);
      for (size_t i = 0; i < im.size(); ++i)
        frob_[1][static_cast<size_t>(j) * n_ + i] = static_cast<uint8_t>(im[i]);
    }
    for (uint32_t l = 2; l < n_; ++l) {
      for (uint32_t j = 0; j < n_; ++j) {
        // column j of frob_[l] = frob_[1] applied to column j of frob_[l-1]
        for (uint32_t i = 0; i < n_; ++i) {
          uint32_t acc = 0;
          for (uint32_t k = 0; k < n_; ++k)
            acc = base_.add(acc, base_.mul(frob_[l - 1][static_cast<size_t>(j) * n_ + k],
                                           frob_[1][static_cast<size_t>(k) * n_ + i]));
          frob_[l][static_cast<size_t>(j) * n_ + i] = static_cast<uint8_t>(acc);
        }
      }
    }
  }
}

ExtField ExtField::make(uint32_t q, uint32_t n) {
  GroundField K = GroundField::make(q);
  if (n == 1) return ExtField(std::move(K), 1, {0, 1});
  // lexicographically least irreducible modulus over GF(q)
  uint64_t count = 1;
  for (uint32_t i = 0; i < n; ++i) count *= q;
  // lex order compares coefficient tuples from the leading end down, so the
  // constant term is the fastest-varying digit of the scan
  for (uint64_t idx = 0; idx < count; ++idx) {
    std::vector<uint32_t> m(n + 1, 0);
    m[n] = 1;
    uint64_t t = idx;
    for (uint32_t i = 0; i < n; ++i) {
      m[i] = static_cast<uint32_t>(t % q);
      t /= q;
    }
    GPoly gp(m.begin(), m.end());
    if (irreducible(K, gp)) return ExtField(std::move(K), n, m);
  }
  throw std::logic_error("ext field: no irreducible modulus found");
}

FF ExtField::one() const {
  FF x;
  x.c[0] = 1;
  return x;
}

FF ExtField::gen() const {
  if (n_ == 1) {
    // residue of x is the constant -m0
    FF x;
    x.c[0] = static_cast<uint8_t>(base_.neg(modulus_[0]));
    return x;
  }
  FF x;
  x.c[1] = 1;
  return x;
}

FF ExtField::from_ground(GroundField::Elem v) const {
  if (v >= base_.q()) throw std::invalid_argument("ext field: ground code out of range");
  FF x;
  x.c[0] = static_cast<uint8_t>(v);
  return x;
}

FF ExtField::from_coeffs(const std::vector<uint32_t>& c) const {
  if (c.size() > n_) throw std::invalid_argument("ext field: too many coefficients");
  FF x;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= base_.q()) throw std::invalid_argument("ext field: coefficient out of range");
    x.c[i] = static_cast<uint8_t>(c[i]);
  }
  return x;
}

std::vector<uint32_t> ExtField::coeffs(const FF& x) const {
  std::vector<uint32_t> c(n_);
  for (uint32_t i = 0; i < n_; ++i) c[i] = x.c[i];
  return c;
}

FF ExtField::add(const FF& x, const FF& y) const {
  FF r;
  for (uint32_t i = 0; i < n_; ++i) r.c[i] = static_cast<uint8_t>(base_.add(x.c[i], y.c[i]));
  return r;
}

FF ExtField::sub(const FF& x, const FF& y) const {
  FF r;
  for (uint32_t i = 0; i < n_; ++i) r.c[i] = static_cast<uint8_t>(base_.sub(x.c[i], y.c[i]));
  return r;
}

FF ExtField::neg(const FF& x) const {
  FF r;
  for (uint32_t i = 0; i < n_; ++i) r.c[i] = static_cast<uint8_t>(base_.neg(x.c[i]));
  return r;
}

FF ExtField::scal(GroundField::Elem c, const FF& x) const {
  FF r;
  for (uint32_t i = 0; i < n_; ++i) r.c[i] = static_cast<uint8_t>(base_.mul(c, x.c[i]));
  return r;
}

FF ExtField::mul(const FF& x, const FF& y) const {
  uint32_t prod[2 * FF::kMaxDegree] = {};
  for (uint32_t i = 0; i < n_; ++i) {
    if (x.c[i] == 0) continue;
    for (uint32_t j = 0; j < n_; ++j)
      if (y.c[j] != 0) prod[i + j] = base_.add(prod[i + j], base_.mul(x.c[i], y.c[j]));
  }
  FF r;
  for (uint32_t i = 0; i < n_; ++i) r.c[i] = static_cast<uint8_t>(prod[i]);
  for (uint32_t i = n_; i <= 2 * (n_ - 1) && n_ > 1; ++i) {
    if (prod[i] == 0) continue;
    const auto& red = reduction_[i - n_];
    for (uint32_t j = 0; j < n_; ++j)
      r.c[j] = static_cast<uint8_t>(base_.add(r.c[j], base_.mul(prod[i], red[j])));
  }
  return r;
}

FF ExtField::inv(const FF& x) const {
  if (is_zero(x)) throw std::domain_error("ext field: inverse of zero");
  // extended Euclid over GF(q)[x] against the modulus
  GPoly r0(modulus_.begin(), modulus_.end());
  GPoly r1;
  for (uint32_t i = 0; i < n_; ++i) r1.push_back(x.c[i]);
  r1 = gtrim(std::move(r1));
  GPoly s0{}, s1{1};
  while (true) {
    // r0 = q*r1 + r ; compute q and remainder
    GPoly q;
    GPoly rem = r0;
    const uint32_t lead_inv = base_.inv(r1.back());
    while (rem.size() >= r1.size() && !rem.empty()) {
      uint32_t c = base_.mul(rem.back(), lead_inv);
      size_t shift = rem.size() - r1.size();
      if (q.size() < shift + 1) q.resize(shift + 1, 0);
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i)
        rem[shift + i] = base_.sub(rem[shift + i], base_.mul(c, r1[i]));
      rem = gtrim(std::move(rem));
      if (rem.empty()) break;
    }
    // s = s0 - q*s1
    GPoly qs1 = gmul(base_, q, s1);
    GPoly s(std::max(s0.size(), qs1.size()), 0);
    for (size_t i = 0; i < s.size(); ++i) {
      uint32_t u = i < s0.size() ? s0[i] : 0;
      uint32_t v = i < qs1.size() ? qs1[i] : 0;
      s[i] = base_.sub(u, v);
    }
    s = gtrim(std::move(s));
    if (rem.empty()) {
      // r1 is the gcd, necessarily a nonzero constant
      uint32_t ci = base_.inv(r1[0]);
      FF out;
      for (size_t i = 0; i < s1.size() && i < n_; ++i)
        out.c[i] = static_cast<uint8_t>(base_.mul(ci, s1[i]));
      return out;
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
}

FF ExtField::pow(FF x, uint64_t e) const {
  FF r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

FF ExtField::frobenius(const FF& x, int64_t l) const {
  int64_t k = l % static_cast<int64_t>(n_);
  if (k < 0) k += n_;
  if (k == 0) return x;
  const auto& m = frob_[static_cast<size_t>(k)];
  FF r;
  for (uint32_t j = 0; j < n_; ++j) {
    if (x.c[j] == 0) continue;
    for (uint32_t i = 0; i < n_; ++i)
      r.c[i] = static_cast<uint8_t>(
          base_.add(r.c[i], base_.mul(x.c[j], m[static_cast<size_t>(j) * n_ + i])));
  }
  return r;
}

FF ExtField::inv_frobenius(const FF& x, int64_t l) const {
  int64_t k = l % static_cast<int64_t>(n_);
  if (k < 0) k += n_;
  return frobenius(x, static_cast<int64_t>(n_) - k);
}

FF ExtField::element_at(uint64_t idx) const {
  FF x;
  for (uint32_t i = 0; i < n_; ++i) {
    x.c[i] = static_cast<uint8_t>(idx % base_.q());
    idx /= base_.q();
  }
  return x;
}

uint64_t ExtField::index_of(const FF& x) const {
  uint64_t idx = 0;
  for (uint32_t i = n_; i-- > 0;) idx = idx * base_.q() + x.c[i];
  return idx;
}

bool is_basis(const ExtField& F, const std::vector<FF>& elems) {
  if (elems.size() != F.n()) return false;
  GMat m(F.n(), F.n());
  for (uint32_t r = 0; r < F.n(); ++r)
    for (uint32_t c = 0; c < F.n(); ++c) m.at(r, c) = elems[r].c[c];
  return gmat_rank(F.base(), m) == static_cast<int>(F.n());
}

FFMat moore_matrix(const ExtField& F, const FieldBasis& basis, int k) {
  const int n = static_cast<int>(F.n());
  if (k < 1 || k > n) throw std::invalid_argument("moore matrix: k out of range");
  if (basis.elems.size() != F.n())
    throw std::invalid_argument("moore matrix: basis has wrong length");
  FFMat M(k, n);
  for (int c = 0; c < n; ++c) M.at(0, c) = basis.elems[c];
  for (int r = 1; r < k; ++r)
    for (int c = 0; c < n; ++c) M.at(r, c) = F.frobenius(M.at(r - 1, c), 1);
  return M;
}

FieldBasis dual_basis(const ExtField& F, const FieldBasis& basis) {
  const int n = static_cast<int>(F.n());
  FFMat M = moore_matrix(F, basis, n);
  FFMat Minv = ffmat_inverse(F, M);  // throws on singular input
  // M(beta)^T = M(alpha)^{-1}, so beta is the first column of the inverse
  FieldBasis dual;
  dual.elems.resize(n);
  for (int j = 0; j < n; ++j) dual.elems[j] = Minv.at(j, 0);
  return dual;
}

FieldBasis power_basis(const ExtField& F) {
  FieldBasis b;
  FF x = F.one();
  for (uint32_t i = 0; i < F.n(); ++i) {
    b.elems.push_back(x);
    x = F.mul(x, F.gen());
  }
  return b;
}

}  // namespace rtc
