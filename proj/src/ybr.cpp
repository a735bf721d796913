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

#include "qgf/ybr.hpp"

#include <algorithm>

#include "qgf/word.hpp"

namespace qgf {

const Scalar& RMatrix::entry(int i, int j, int k, int l) const {
  return m(pair_index(k - 1, l - 1, n), pair_index(i - 1, j - 1, n));
}

Scalar& RMatrix::entry(int i, int j, int k, int l) { return m(pair_index(k - 1, l - 1, n), pair_index(i - 1, j - 1, n)); }

RMatrix build_R(const ParamSet& ps) {
  const int n = ps.n;
  const KappaTable kap = kappa(ps);
  RMatrix R{n, DenseMatrix(ps.field, n * n, n * n)};
  const Scalar rm1 = ps.r - Scalar::one(ps.field);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      R.entry(i, j, j, i) = kap[i - 1][j - 1];
      if (i > j) R.entry(i, j, i, j) = rm1;
    }
  }
  return R;
}

YbeResult check_ybe(const RMatrix& R) {
  const std::size_t d = static_cast<std::size_t>(R.n);
  if (R.m.rows() != d * d || R.m.cols() != d * d) throw Error(ErrorCode::DimensionMismatch, "R must be n^2 x n^2");
  const DenseMatrix I = DenseMatrix::identity(R.m.field(), d);
  const DenseMatrix R12 = R.m.kron(I);
  const DenseMatrix R23 = I.kron(R.m);
  const DenseMatrix lhs = R12 * R23 * R12;
  const DenseMatrix rhs = R23 * R12 * R23;
  YbeResult res;
  res.witness = lhs.first_difference(rhs);
  res.holds = !res.witness.has_value();
  if (res.witness) {
    res.lhs_value = lhs(res.witness->first, res.witness->second).str();
    res.rhs_value = rhs(res.witness->first, res.witness->second).str();
  }
  return res;
}

RMatrix invert_R(const RMatrix& R) { return RMatrix{R.n, R.m.inverse()}; }

bool hecke_probe(const RMatrix& R, const Scalar& r) {
  const DenseMatrix I = DenseMatrix::identity(R.m.field(), R.m.rows());
  const DenseMatrix prod = (R.m - I.scaled(r)) * (R.m + I);
  return prod == DenseMatrix(R.m.field(), R.m.rows(), R.m.cols());
}

std::size_t max_column_nonzeros(const RMatrix& R) {
  std::size_t best = 0;
  for (std::size_t j = 0; j < R.m.cols(); ++j) best = std::max(best, R.m.nonzeros_in_column(j));
  return best;
}

}  // namespace qgf
