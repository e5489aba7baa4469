#include "rtc/linalg.hpp"

#include <stdexcept>

namespace rtc {

FFMat ffmat_mul(const ExtField& F, const FFMat& A, const FFMat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("ffmat_mul: shape mismatch");
  FFMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const FF& aik = A.at(i, k);
      if (F.is_zero(aik)) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
    }
  return C;
}

FFMat ffmat_transpose(const FFMat& A) {
  FFMat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

FFMat ffmat_identity(const ExtField& F, int n) {
  FFMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = F.one();
  return I;
}

FFMat ffmat_inverse(const ExtField& F, const FFMat& A) {
  if (A.rows != A.cols) throw std::invalid_argument("ffmat_inverse: not square");
  const int n = A.rows;
  FFMat W(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) W.at(i, j) = A.at(i, j);
    W.at(i, n + i) = F.one();
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!F.is_zero(W.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("ffmat_inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(W.at(piv, j), W.at(col, j));
    FF s = F.inv(W.at(col, col));
    for (int j = 0; j < 2 * n; ++j) W.at(col, j) = F.mul(s, W.at(col, j));
    for (int r = 0; r < n; ++r) {
      if (r == col || F.is_zero(W.at(r, col))) continue;
      FF f = W.at(r, col);
      for (int j = 0; j < 2 * n; ++j)
        W.at(r, j) = F.sub(W.at(r, j), F.mul(f, W.at(col, j)));
    }
  }
  FFMat R(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R.at(i, j) = W.at(i, n + j);
  return R;
}

namespace {

// Row-reduces A in place; returns pivot columns in order.
std::vector<int> ff_rref(const ExtField& F, FFMat& A) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < A.cols && row < A.rows; ++col) {
    int piv = -1;
    for (int r = row; r < A.rows; ++r)
      if (!F.is_zero(A.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(row, j));
    FF s = F.inv(A.at(row, col));
    for (int j = 0; j < A.cols; ++j) A.at(row, j) = F.mul(s, A.at(row, j));
    for (int r = 0; r < A.rows; ++r) {
      if (r == row || F.is_zero(A.at(r, col))) continue;
      FF f = A.at(r, col);
      for (int j = 0; j < A.cols; ++j)
        A.at(r, j) = F.sub(A.at(r, j), F.mul(f, A.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<int> g_rref(const GroundField& K, GMat& A) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < A.cols && row < A.rows; ++col) {
    int piv = -1;
    for (int r = row; r < A.rows; ++r)
      if (A.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(row, j));
    uint32_t s = K.inv(A.at(row, col));
    for (int j = 0; j < A.cols; ++j) A.at(row, j) = static_cast<uint8_t>(K.mul(s, A.at(row, j)));
    for (int r = 0; r < A.rows; ++r) {
      if (r == row || A.at(r, col) == 0) continue;
      uint32_t f = A.at(r, col);
      for (int j = 0; j < A.cols; ++j)
        A.at(r, j) = static_cast<uint8_t>(K.sub(A.at(r, j), K.mul(f, A.at(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int ffmat_rank(const ExtField& F, FFMat A) { return static_cast<int>(ff_rref(F, A).size()); }

std::vector<std::vector<FF>> ffmat_nullspace(const ExtField& F, FFMat A) {
  std::vector<int> pivots = ff_rref(F, A);
  std::vector<bool> is_pivot(A.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FF>> basis;
  for (int free = 0; free < A.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FF> v(A.cols, F.zero());
    v[free] = F.one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(A.at(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

GMat gmat_mul(const GroundField& K, const GMat& A, const GMat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("gmat_mul: shape mismatch");
  GMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      uint32_t aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = static_cast<uint8_t>(K.add(C.at(i, j), K.mul(aik, B.at(k, j))));
    }
  return C;
}

GMat gmat_transpose(const GMat& A) {
  GMat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

int gmat_rank(const GroundField& K, GMat A) { return static_cast<int>(g_rref(K, A).size()); }

std::vector<std::vector<uint8_t>> gmat_nullspace(const GroundField& K, GMat A) {
  std::vector<int> pivots = g_rref(K, A);
  std::vector<bool> is_pivot(A.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<uint8_t>> basis;
  for (int free = 0; free < A.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint8_t> v(A.cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = static_cast<uint8_t>(K.neg(A.at(static_cast<int>(r), free)));
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveStatus gmat_solve(const GroundField& K, GMat A, std::vector<uint8_t> b,
                       std::vector<uint8_t>& x) {
  if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("gmat_solve: shape");
  GMat W(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) W.at(i, j) = A.at(i, j);
    W.at(i, A.cols) = b[i];
  }
  std::vector<int> pivots = g_rref(K, W);
  for (int c : pivots)
    if (c == A.cols) return SolveStatus::kNone;  // inconsistent row
  if (static_cast<int>(pivots.size()) < A.cols) {
    // fill a particular solution anyway (free vars = 0), flag non-uniqueness
    x.assign(A.cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = W.at(static_cast<int>(r), A.cols);
    return SolveStatus::kMultiple;
  }
  x.assign(A.cols, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = W.at(static_cast<int>(r), A.cols);
  return SolveStatus::kUnique;
}

int rank_fq(const ExtField& F, const std::vector<FF>& v) {
  const int n = static_cast<int>(F.n());
  GMat m(static_cast<int>(v.size()), n);
  for (size_t r = 0; r < v.size(); ++r)
    for (int c = 0; c < n; ++c) m.at(static_cast<int>(r), c) = v[r].c[c];
  return gmat_rank(F.base(), m);
}

FFMat ffmat_sandwich(const ExtField& F, const GMat& L, const FFMat& A, const GMat& R) {
  if (L.cols != A.rows || A.cols != R.rows) throw std::invalid_argument("sandwich: shape");
  FFMat T(L.rows, A.cols);
  for (int i = 0; i < L.rows; ++i)
    for (int k = 0; k < L.cols; ++k) {
      uint32_t lik = L.at(i, k);
      if (lik == 0) continue;
      for (int j = 0; j < A.cols; ++j)
        T.at(i, j) = F.add(T.at(i, j), F.scal(lik, A.at(k, j)));
    }
  FFMat C(L.rows, R.cols);
  for (int i = 0; i < T.rows; ++i)
    for (int k = 0; k < T.cols; ++k) {
      if (F.is_zero(T.at(i, k))) continue;
      for (int j = 0; j < R.cols; ++j) {
        uint32_t rkj = R.at(k, j);
        if (rkj == 0) continue;
        C.at(i, j) = F.add(C.at(i, j), F.scal(rkj, T.at(i, k)));
      }
    }
  return C;
}

}  // namespace rtc
