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

#ifndef QGF_CARTAN_HPP
#define QGF_CARTAN_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgf/params.hpp"

namespace qgf {

/// (n-1) x (n-1); entry [i-1][j-1] = l_ij.
using BraidMatrix = std::vector<std::vector<Scalar>>;

/// l_ij = kappa_j^{i+1} kappa_{j+1}^i / (kappa_{j+1}^{i+1} kappa_j^i).
BraidMatrix braid_matrix(const ParamSet& ps);
/// The same coefficients from the case split on j against i-1, i, i+1,
/// written in terms of p and q.
BraidMatrix braid_matrix_cases(const ParamSet& ps);

/// s_ij = l_ij l_ji
std::vector<std::vector<Scalar>> symmetrized(const BraidMatrix& bm);

struct CartanResult {
  bool is_cartan = false;
  std::vector<std::vector<int>> a;
  std::vector<int> d;
  std::string type;  // "A_k" or "NotCartan"
  std::optional<std::pair<int, int>> witness;
};

/// Tries the type A Cartan matrix with d_i = 1 against s_ij = q^{a_ij}.
CartanResult detect_type_A(const std::vector<std::vector<Scalar>>& s, const Scalar& q);

}  // namespace qgf

#endif
