// Copyright 2026 The qgroup-frt Authors
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

#ifndef QGF_LINALG_HPP
#define QGF_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qgf/scalar.hpp"

namespace qgf {

class DenseMatrix {
 public:
  DenseMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static DenseMatrix identity(FieldPtr field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldPtr& field() const noexcept { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  DenseMatrix scaled(const Scalar& c) const;
  DenseMatrix transpose() const;
  DenseMatrix kron(const DenseMatrix& o) const;
  /// Throws SingularMatrix.
  DenseMatrix inverse() const;

  bool operator==(const DenseMatrix& o) const;
  /// First (row, col) where the two matrices differ.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const DenseMatrix& o) const;
  std::size_t nonzeros_in_column(std::size_t j) const;

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Row-sparse matrix; each row holds (column, value) pairs sorted by column,
/// zeros never stored.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Scalar>;
  using Row = std::vector<Entry>;

  SparseMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static SparseMatrix identity(FieldPtr field, std::size_t n);
  static SparseMatrix diagonal(FieldPtr field, const std::vector<Scalar>& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldPtr& field() const noexcept { return field_; }
  const Row& row(std::size_t i) const { return data_[i]; }

  Scalar at(std::size_t i, std::size_t j) const;
  /// Adds v at (i, j).
  void add_to(std::size_t i, std::size_t j, const Scalar& v);
  void set_row(std::size_t i, Row r);
  bool is_zero() const;

  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& c) const;
  SparseMatrix kron(const SparseMatrix& o) const;

  bool operator==(const SparseMatrix& o) const;

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<Row> data_;
};

/// Reduced row echelon form over the scalar field; rows are vectors of
/// equal length. Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& rows);

}  // namespace qgf

#endif
