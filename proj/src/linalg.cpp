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

#include "qgf/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "qgf/word.hpp"

namespace qgf {

std::vector<TWord> all_words(int n, int s) {
  const std::size_t count = ipow(static_cast<std::size_t>(n) * n, s);
  std::vector<TWord> out;
  out.reserve(count);
  TWord w(s, Letter{1, 1});
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(w);
    for (int t = s - 1; t >= 0; --t) {
      if (w[t].col < n) {
        ++w[t].col;
        break;
      }
      w[t].col = 1;
      if (w[t].row < n) {
        ++w[t].row;
        break;
      }
      w[t].row = 1;
    }
  }
  return out;
}

std::string word_str(const TWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << " ";
    os << "T" << w[k].row << "^" << w[k].col;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field_)) {}

DenseMatrix DenseMatrix::identity(FieldPtr field, std::size_t n) {
  DenseMatrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Scalar::one(field);
  return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  DenseMatrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (b.is_zero()) continue;
        out(i, j) += a * b;
      }
    }
  }
  return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  DenseMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!o.data_[k].is_zero()) out.data_[k] += o.data_[k];
  }
  return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const { return *this + o.scaled(Scalar::integer(field_, -1)); }

DenseMatrix DenseMatrix::scaled(const Scalar& c) const {
  DenseMatrix out = *this;
  for (auto& x : out.data_) {
    if (!x.is_zero()) x *= c;
  }
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

DenseMatrix DenseMatrix::kron(const DenseMatrix& o) const {
  DenseMatrix out(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l) {
          if (!o(k, l).is_zero()) out(i * o.rows_ + k, j * o.cols_ + l) = a * o(k, l);
        }
    }
  return out;
}

DenseMatrix DenseMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  DenseMatrix a = *this;
  DenseMatrix inv = identity(field_, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Scalar piv = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(c, j).is_zero()) a(c, j) *= piv;
      if (!inv(c, j).is_zero()) inv(c, j) *= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
        if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const { return !first_difference(o).has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> DenseMatrix::first_difference(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "comparing matrices of different shape");
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != o(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

std::size_t DenseMatrix::nonzeros_in_column(std::size_t j) const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < rows_; ++i) count += (*this)(i, j).is_zero() ? 0 : 1;
  return count;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::identity(FieldPtr field, std::size_t n) {
  SparseMatrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out.data_[i].emplace_back(i, Scalar::one(field));
  return out;
}

SparseMatrix SparseMatrix::diagonal(FieldPtr field, const std::vector<Scalar>& d) {
  SparseMatrix out(field, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_zero()) out.data_[i].emplace_back(i, d[i]);
  }
  return out;
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
  const Row& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) return it->second;
  return Scalar::zero(field_);
}

void SparseMatrix::add_to(std::size_t i, std::size_t j, const Scalar& v) {
  if (v.is_zero()) return;
  Row& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (it->second.is_zero()) r.erase(it);
  } else {
    r.insert(it, Entry(j, v));
  }
}

void SparseMatrix::set_row(std::size_t i, Row r) {
  r.erase(std::remove_if(r.begin(), r.end(), [](const Entry& e) { return e.second.is_zero(); }), r.end());
  std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  data_[i] = std::move(r);
}

bool SparseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "sparse product shape mismatch");
  SparseMatrix out(field_, rows_, o.cols_);
  std::vector<std::optional<Scalar>> acc(o.cols_);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < rows_; ++i) {
    touched.clear();
    for (const auto& [k, a] : data_[i]) {
      for (const auto& [j, b] : o.data_[k]) {
        if (acc[j]) {
          *acc[j] += a * b;
        } else {
          acc[j] = a * b;
          touched.push_back(j);
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    Row& r = out.data_[i];
    for (std::size_t j : touched) {
      if (!acc[j]->is_zero()) r.emplace_back(j, *acc[j]);
      acc[j].reset();
    }
  }
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "sparse sum shape mismatch");
  SparseMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const Row& a = data_[i];
    const Row& b = o.data_[i];
    Row& r = out.data_[i];
    std::size_t p = 0, q = 0;
    while (p < a.size() || q < b.size()) {
      if (q == b.size() || (p < a.size() && a[p].first < b[q].first)) {
        r.push_back(a[p++]);
      } else if (p == a.size() || b[q].first < a[p].first) {
        r.push_back(b[q++]);
      } else {
        Scalar s = a[p].second + b[q].second;
        if (!s.is_zero()) r.emplace_back(a[p].first, std::move(s));
        ++p;
        ++q;
      }
    }
  }
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const { return *this + o.scaled(Scalar::integer(field_, -1)); }

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
  SparseMatrix out(field_, rows_, cols_);
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out.data_[i].reserve(data_[i].size());
    for (const auto& [j, v] : data_[i]) out.data_[i].emplace_back(j, v * c);
  }
  return out;
}

SparseMatrix SparseMatrix::kron(const SparseMatrix& o) const {
  SparseMatrix out(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < o.rows_; ++k) {
      Row& r = out.data_[i * o.rows_ + k];
      for (const auto& [j, a] : data_[i])
        for (const auto& [l, b] : o.data_[k]) r.emplace_back(j * o.cols_ + l, a * b);
    }
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Row& a = data_[i];
    const Row& b = o.data_[i];
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].first != b[k].first || a[k].second != b[k].second) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t width = rows[0].size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < width && top < rows.size(); ++c) {
    std::size_t p = top;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[top]);
    const Scalar inv = rows[top][c].inverse();
    for (auto& x : rows[top]) {
      if (!x.is_zero()) x *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == top || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t j = c; j < width; ++j) {
        if (!rows[top][j].is_zero()) rows[i][j] -= f * rows[top][j];
      }
    }
    pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  return pivots;
}

}  // namespace qgf
