// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cimat/models.h"

#include <numeric>
#include <random>

#include "cimat/errors.h"

namespace cimat {
namespace {

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row.
std::vector<int> row_reduce(RationalMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
    }
    Rational inv = 1 / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational factor = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RationalMatrix columns_of(const RationalMatrix& m, Subset s) {
  std::vector<int> rows(m.rows());
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<int> cols = elements_of(s);
  return m.submatrix(rows, cols);
}

void require_positive_rank(const VectorConfiguration& v) {
  if (v.rank() == 0) throw ValidationError("vector configuration has rank 0");
}

}  // namespace

RationalMatrix::RationalMatrix(int rows, int cols)
    : RationalMatrix(rows, cols,
                     std::vector<Rational>(static_cast<std::size_t>(
                         std::max(rows, 0) * std::max(cols, 0)))) {}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols), entries_(std::move(row_major)) {
  if (rows < 1 || cols < 1) throw RangeError("matrix dimensions must be positive");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw RangeError("matrix entry count does not match its dimensions");
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::submatrix(std::span<const int> rows,
                                         std::span<const int> cols) const {
  RationalMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(static_cast<int>(r), static_cast<int>(c)) = (*this)(rows[r], cols[c]);
    }
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw RangeError("matrix product dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < b.cols_; ++c) {
      Rational sum = 0;
      for (int k = 0; k < a.cols_; ++k) sum += a(r, k) * b(k, c);
      out(r, c) = sum;
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw RangeError("matrix sum dimension mismatch");
  }
  RationalMatrix out = a;
  for (std::size_t e = 0; e < out.entries_.size(); ++e) out.entries_[e] += b.entries_[e];
  return out;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw RangeError("determinant of a non-square matrix");
  RationalMatrix a = m;
  int n = a.rows();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rational factor = a(r, col) / a(col, col);
      for (int c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

int matrix_rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return static_cast<int>(row_reduce(a).size());
}

std::vector<int> row_basis(const RationalMatrix& m) {
  // Row-reducing the transpose exposes the independent rows as pivots.
  RationalMatrix t = m.transpose();
  return row_reduce(t);
}

VectorConfiguration::VectorConfiguration(RationalMatrix columns)
    : columns_(std::move(columns)), rank_(matrix_rank(columns_)) {
  if (columns_.cols() > kMaxGroundSize) {
    throw CapacityError("at most 16 vectors supported");
  }
}

int VectorConfiguration::rank(Subset s) const {
  if (s == 0) return 0;
  return matrix_rank(columns_of(columns_, s));
}

Matroid linear_matroid(const VectorConfiguration& v) {
  int n = v.size();
  std::vector<int> r(std::size_t{1} << n);
  for (Subset s = 0; s < r.size(); ++s) r[s] = v.rank(s);
  return Matroid(RankFunction(n, std::move(r)));
}

Chirotope chirotope_from_vectors(const VectorConfiguration& v) {
  require_positive_rank(v);
  int n = v.size();
  int r = v.rank();
  std::vector<int> rows = row_basis(v.matrix());
  std::vector<signed char> signs(std::size_t{1} << n, 0);
  for (Subset s = 0; s < signs.size(); ++s) {
    if (cardinality(s) != r) continue;
    std::vector<int> cols = elements_of(s);
    signs[s] = static_cast<signed char>(sign(determinant(v.matrix().submatrix(rows, cols))));
  }
  return Chirotope(n, r, std::move(signs));
}

SignedCircuitSet signed_circuits_from_vectors(const VectorConfiguration& v) {
  require_positive_rank(v);
  Matroid m = linear_matroid(v);
  std::vector<SignedSet> reps;
  for (Subset circuit : m.circuits()) {
    std::vector<int> cols = elements_of(circuit);
    RationalMatrix a = columns_of(v.matrix(), circuit);
    std::vector<int> pivots = row_reduce(a);
    if (pivots.size() + 1 != cols.size()) {
      throw ConsistencyError("circuit " + brace_subset(circuit) +
                             " does not have a one-dimensional kernel");
    }
    int free_col = 0;
    while (free_col < static_cast<int>(pivots.size()) && pivots[free_col] == free_col) {
      ++free_col;
    }
    std::vector<Rational> lambda(cols.size(), 0);
    lambda[free_col] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) {
      lambda[pivots[row]] = -a(static_cast<int>(row), free_col);
    }
    SignedSet x;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int s = sign(lambda[c]);
      if (s == 0) {
        throw ConsistencyError("kernel of circuit " + brace_subset(circuit) +
                               " has a zero coordinate");
      }
      (s > 0 ? x.positive : x.negative) |= bit(cols[c]);
    }
    reps.push_back(x);
  }
  return SignedCircuitSet::symmetric(v.size(), reps);
}

void check_covariance(const RationalMatrix& sigma) {
  if (!sigma.is_square()) throw ValidationError("covariance matrix must be square");
  int n = sigma.rows();
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      if (sigma(r, c) != sigma(c, r)) {
        throw ValidationError("matrix not symmetric at (" + std::to_string(r + 1) +
                              "," + std::to_string(c + 1) + ")");
      }
    }
  }
  for (int k = 1; k <= n; ++k) {
    std::vector<int> lead(k);
    std::iota(lead.begin(), lead.end(), 0);
    Rational d = determinant(sigma.submatrix(lead, lead));
    if (d <= 0) {
      throw ValidationError("matrix not positive definite: leading principal minor of order " +
                            std::to_string(k) + " is " + format_rational(d));
    }
  }
}

CIStructure gaussian_ci(const RationalMatrix& sigma) {
  check_covariance(sigma);
  int n = sigma.rows();
  if (n > kMaxGroundSize) throw CapacityError("covariance matrix too large");
  CIStructure g(n);
  const StatementIndex& idx = g.index();
  for (std::size_t s = 0; s < idx.size(); ++s) {
    CIStatement st = idx.statement(s);
    std::vector<int> rows{st.i};
    std::vector<int> cols{st.j};
    for (int e : elements_of(st.k)) {
      rows.push_back(e);
      cols.push_back(e);
    }
    if (determinant(sigma.submatrix(rows, cols)) == 0) g.set_index(s, true);
  }
  return g;
}

RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (int r = 0; r < b.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  }
  return out;
}

RationalMatrix random_covariance(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  RationalMatrix a(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a(r, c) = entry(rng);
  }
  return a.transpose() * a + RationalMatrix::identity(n);
}

VectorConfiguration random_configuration(int d, int n, int lo, int hi,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(lo, hi);
  RationalMatrix m(d, n);
  for (int c = 0; c < n; ++c) {
    bool zero = true;
    while (zero) {
      for (int r = 0; r < d; ++r) {
        m(r, c) = entry(rng);
        if (m(r, c) != 0) zero = false;
      }
    }
  }
  return VectorConfiguration(std::move(m));
}

}  // namespace cimat
