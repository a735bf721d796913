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

#ifndef QGF_YBR_HPP
#define QGF_YBR_HPP

#include <optional>
#include <string>

#include "qgf/linalg.hpp"
#include "qgf/params.hpp"

namespace qgf {

/// n^2 x n^2 matrix; row (k,l), column (i,j), both via pair_index.
/// Entry = R_{ij}^{kl}.
struct RMatrix {
  int n = 0;
  DenseMatrix m;

  const Scalar& entry(int i, int j, int k, int l) const;  // R_{ij}^{kl}, 1-based
  Scalar& entry(int i, int j, int k, int l);
};

struct YbeResult {
  bool holds = false;
  /// First differing entry of the two n^3 x n^3 products.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string lhs_value, rhs_value;
};

RMatrix build_R(const ParamSet& ps);
YbeResult check_ybe(const RMatrix& R);
RMatrix invert_R(const RMatrix& R);
/// Whether (R - r)(R + 1) vanishes; data only.
bool hecke_probe(const RMatrix& R, const Scalar& r);
std::size_t max_column_nonzeros(const RMatrix& R);

}  // namespace qgf

#endif
