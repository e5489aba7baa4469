#include "rtc/counting.hpp"

#include <cmath>
#include <stdexcept>

namespace rtc {

namespace {

BigCount big_pow(const BigCount& q, int e) {
  BigCount r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigCount r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

BigCount exact_div(BigCount num, const BigCount& den) {
  if (num % den != 0) throw std::logic_error("counting: non-exact division");
  return num / den;
}

}  // namespace

BigCount gaussian_binomial(int a, int b, const BigCount& q) {
  if (a < 0 || a > b) throw std::invalid_argument("gaussian_binomial: need 0 <= a <= b");
  BigCount num = 1, den = 1;
  for (int i = 0; i < a; ++i) {
    num *= big_pow(q, b - i) - 1;
    den *= big_pow(q, i + 1) - 1;
  }
  return exact_div(num, den);
}

BigCount count_rank_matrices(const BigCount& q, int rows, int cols, int r) {
  if (r < 0 || r > std::min(rows, cols))
    throw std::invalid_argument("count_rank_matrices: rank out of range");
  if (r == 0) return 1;
  BigCount num = 1, den = 1;
  for (int i = 0; i < r; ++i) {
    num *= (big_pow(q, rows) - big_pow(q, i)) * (big_pow(q, cols) - big_pow(q, i));
    den *= big_pow(q, r) - big_pow(q, i);
  }
  return exact_div(num, den);
}

BigCount count_trank1(const BigCount& q, int k, int m, int n) {
  return exact_div((big_pow(q, m) - 1) * (big_pow(q, n) - 1) * (big_pow(q, k) - 1),
                   (q - 1) * (q - 1));
}

BigCount count_trank2(const BigCount& q, int k, int m, int n) {
  if (k < 2 || m < 2 || n < 2) throw std::invalid_argument("count_trank2: dims must be >= 2");
  BigCount pre_num = q * (big_pow(q, n) - 1) * (big_pow(q, m) - 1) * (big_pow(q, k) - 1);
  BigCount pre_den = (q - 1) * (q - 1) * (q - 1) * (q * q - 1);
  // first summand carries a /2, second a /q^2; clear both denominators
  BigCount t1 =
      (big_pow(q, n - 1) - 1) * (big_pow(q, m - 1) - 1) * (big_pow(q, k - 1) - 1) * q * q * (q + 1);
  BigCount t2 = (q - 1) * (big_pow(q, n + m) + big_pow(q, k + n) + big_pow(q, k + m) -
                           2 * q * (big_pow(q, k) + big_pow(q, m) + big_pow(q, n)) + 3 * q * q);
  return exact_div(pre_num * (t1 * q * q + 2 * t2), pre_den * 2 * q * q);
}

BigCount roth_trank2_count(const BigCount& q, int n) {
  BigCount a = q * big_pow(big_pow(q, n) - 1, 3) * big_pow(big_pow(q, n - 1) - 1, 2);
  BigCount b = (q - 1) * (q - 1) * (q - 1) * (q * q - 1);
  BigCount inner = q * q * (q + 1) * (big_pow(q, n - 1) - 1) + 2 * 3 * (q - 1);
  BigCount rank2 = exact_div(a * inner, b * 2);
  BigCount rank1 = exact_div(big_pow(big_pow(q, n) - 1, 3), (q - 1) * (q - 1));
  return rank2 + rank1 + 1;
}

std::pair<BigCount, BigCount> alg_error_lowerbounds(const BigCount& q, int n, int mu1, int mu2) {
  const int theta = (n - mu1 - 1) / 2;
  BigCount sigma = 0;
  for (int r = 0; r <= theta; ++r) sigma += count_rank_matrices(q, n, n, r);
  BigCount n1 = big_pow(sigma, n);

  const int kmin = (n + mu2 + 1 + 1) / 2;  // ceil((n + mu2 + 1) / 2)
  BigCount total = big_pow(q, n * n);
  BigCount n2 = 0;
  for (int k = kmin; k <= n; ++k)
    n2 += binomial(n, k) * big_pow(sigma, k) * big_pow(total - sigma, n - k);
  return {n1, n2};
}

Table1Report table1_quantities(const BigCount& q, int n) {
  Table1Report rep;
  rep.s_n = 1 + exact_div((big_pow(q, n) - 1) * (big_pow(q, n) - 1), q - 1);
  rep.t1 = big_pow(rep.s_n, n);
  rep.t2 = n * big_pow(rep.s_n, n - 1) * (big_pow(q, n * n) - rep.s_n) + rep.t1;
  rep.roth_r1 = exact_div(big_pow(big_pow(q, n) - 1, 3), (q - 1) * (q - 1)) + 1;
  rep.roth_r2 = roth_trank2_count(q, n);
  return rep;
}

BigCount rank_le_r_upperbound(const BigCount& q, int n, int r) {
  if (r < 2 || n < 2) throw std::invalid_argument("rank_le_r_upperbound: need R >= 2, n >= 2");
  return exact_div(big_pow(big_pow(q, n) - 1, 3 * r), big_pow(q - 1, 2 * r));
}

double log10_big(const BigCount& x) {
  if (x <= 0) throw std::invalid_argument("log10_big: positive input required");
  const size_t bits = msb(x) + 1;
  if (bits <= 53) return std::log10(x.convert_to<double>());
  BigCount mant = x >> (bits - 53);
  return std::log10(mant.convert_to<double>()) +
         static_cast<double>(bits - 53) * std::log10(2.0);
}

}  // namespace rtc
