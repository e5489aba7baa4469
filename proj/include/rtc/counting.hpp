#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

namespace rtc {

using BigCount = boost::multiprecision::cpp_int;

/// Number of a-dimensional subspaces of GF(q)^b.
BigCount gaussian_binomial(int a, int b, const BigCount& q);

/// Number of rows x cols matrices over GF(q) of rank exactly r.
BigCount count_rank_matrices(const BigCount& q, int rows, int cols, int r);

/// Tensors of rank exactly one in GF(q)^k (x) GF(q)^m (x) GF(q)^n.
BigCount count_trank1(const BigCount& q, int k, int m, int n);

/// Tensors of rank exactly two; requires k, m, n >= 2.
BigCount count_trank2(const BigCount& q, int k, int m, int n);

/// Errors of tensor rank <= 2 correctable by the rank-2 decoder of the
/// order-3 code family; equals count_trank2 + count_trank1 + 1 at k=m=n.
BigCount roth_trank2_count(const BigCount& q, int n);

/// Lower bounds N1 and N2 on the correctable-error counts of the one-pass
/// and two-pass fibre-wise decoders.
std::pair<BigCount, BigCount> alg_error_lowerbounds(const BigCount& q, int n, int mu1, int mu2);

struct Table1Report {
  BigCount s_n;       // vectors of rank <= 1 in GF(q^n)^n
  BigCount t1;        // S_n^n
  BigCount t2;        // n S_n^(n-1) (q^(n^2) - S_n) + S_n^n
  BigCount roth_r1;   // rank-<=1 decoder count + 1
  BigCount roth_r2;   // rank-<=2 decoder count
};

Table1Report table1_quantities(const BigCount& q, int n);

/// Upper bound (q^n - 1)^(3R) / (q - 1)^(2R) on rank <= R tensors, R >= 2.
BigCount rank_le_r_upperbound(const BigCount& q, int n, int r);

/// log10 of a positive big integer, exact to well below 1e-6.
double log10_big(const BigCount& x);

}  // namespace rtc
