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

#include "qgf/cartan.hpp"

#include <cstdlib>

namespace qgf {

BraidMatrix braid_matrix(const ParamSet& ps) {
  const KappaTable k = kappa(ps);
  auto kap = [&](int j, int i) { return k[i - 1][j - 1]; };  // kappa_j^i
  const int size = ps.n - 1;
  BraidMatrix out(size, std::vector<Scalar>(size, Scalar::zero(ps.field)));
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j) {
      out[i - 1][j - 1] = kap(j, i + 1) * kap(j + 1, i) / (kap(j + 1, i + 1) * kap(j, i));
    }
  return out;
}

BraidMatrix braid_matrix_cases(const ParamSet& ps) {
  auto p = [&](int a, int b) { return ps.p.at({a, b}); };
  auto q = [&](int a, int b) { return ps.q(a, b); };
  const Scalar& r = ps.r;
  const int size = ps.n - 1;
  BraidMatrix out(size, std::vector<Scalar>(size, Scalar::zero(ps.field)));
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j) {
      Scalar v = Scalar::zero(ps.field);
      if (j < i - 1) {
        v = q(j, i + 1) / q(j + 1, i + 1) / q(j, i) * q(j + 1, i);
      } else if (j == i - 1) {
        v = q(i - 1, i + 1) / q(i, i + 1) / q(i - 1, i) * r;
      } else if (j == i) {
        v = q(i, i + 1) / r / r * p(i, i + 1);
      } else if (j == i + 1) {
        v = r / p(i + 1, i + 2) / p(i, i + 1) * p(i, i + 2);
      } else {
        v = p(i + 1, j) / p(i + 1, j + 1) / p(i, j) * p(i, j + 1);
      }
      out[i - 1][j - 1] = v;
    }
  return out;
}

std::vector<std::vector<Scalar>> symmetrized(const BraidMatrix& bm) {
  std::vector<std::vector<Scalar>> s = bm;
  for (std::size_t i = 0; i < bm.size(); ++i)
    for (std::size_t j = 0; j < bm.size(); ++j) s[i][j] = bm[i][j] * bm[j][i];
  return s;
}

CartanResult detect_type_A(const std::vector<std::vector<Scalar>>& s, const Scalar& q) {
  const int k = static_cast<int>(s.size());
  CartanResult res;
  res.a.assign(k, std::vector<int>(k, 0));
  res.d.assign(k, 1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) res.a[i][j] = 2;
      else if (std::abs(i - j) == 1) res.a[i][j] = -1;
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (s[i][j] != q.pow(res.d[i] * res.a[i][j])) {
        res.witness = std::make_pair(i + 1, j + 1);
        res.type = "NotCartan";
        return res;
      }
    }
  res.is_cartan = true;
  res.type = "A_" + std::to_string(k);
  return res;
}

}  // namespace qgf
