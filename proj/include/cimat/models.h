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

// Concrete models: rational vector configurations (their chirotopes and
// signed circuits) and Gaussian covariance matrices (their CI-structures).
// All arithmetic is exact.

#ifndef CIMAT_MODELS_H_
#define CIMAT_MODELS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "cimat/ci_structure.h"
#include "cimat/matroid.h"
#include "cimat/oriented.h"
#include "cimat/rational.h"

namespace cimat {

class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);
  RationalMatrix(int rows, int cols, std::vector<Rational> row_major);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return entries_[r * cols_ + c]; }

  // Rows and columns picked by 0-based index lists, in the given order.
  RationalMatrix submatrix(std::span<const int> rows,
                           std::span<const int> cols) const;
  RationalMatrix transpose() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> entries_;
};

// Exact determinant by Gaussian elimination. Throws RangeError if not square.
Rational determinant(const RationalMatrix& m);
int matrix_rank(const RationalMatrix& m);
// Row indices of the first maximal linearly independent set of rows.
std::vector<int> row_basis(const RationalMatrix& m);

// n labeled vectors in Q^d, stored as the columns of a d x n matrix.
class VectorConfiguration {
 public:
  explicit VectorConfiguration(RationalMatrix columns);

  int dimension() const { return columns_.rows(); }
  int size() const { return columns_.cols(); }
  int rank() const { return rank_; }
  const RationalMatrix& matrix() const { return columns_; }
  // Rank of the columns in S.
  int rank(Subset s) const;

 private:
  RationalMatrix columns_;
  int rank_;
};

// The linear matroid of the columns.
Matroid linear_matroid(const VectorConfiguration& v);

// χ(T) = sign det of the columns T restricted to a fixed row basis. Throws
// ValidationError for rank 0.
Chirotope chirotope_from_vectors(const VectorConfiguration& v);

// ±(positive, negative) sign patterns of the kernel vector of each minimal
// dependent column set. Throws ValidationError for rank 0.
SignedCircuitSet signed_circuits_from_vectors(const VectorConfiguration& v);

// Throws ValidationError naming the failing (i, j) if not symmetric, or the
// failing leading principal minor if not positive definite.
void check_covariance(const RationalMatrix& sigma);

// [[Σ]] = {(ij|K) : det Σ_{iK,jK} = 0} with rows i,K and columns j,K.
CIStructure gaussian_ci(const RationalMatrix& sigma);

// Block-diagonal Σ1 ⊕ Σ2.
RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);

// AᵀA + I with A an n x n matrix of integers uniform in {-2..2}, drawn from
// std::mt19937_64 seeded with `seed`.
RationalMatrix random_covariance(int n, std::uint64_t seed);

// d x n integer matrix with entries uniform in {lo..hi} from
// std::mt19937_64(seed), redrawing any zero column.
VectorConfiguration random_configuration(int d, int n, int lo, int hi,
                                         std::uint64_t seed);

}  // namespace cimat

#endif  // CIMAT_MODELS_H_
