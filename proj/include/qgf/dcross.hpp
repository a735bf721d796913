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

#ifndef QGF_DCROSS_HPP
#define QGF_DCROSS_HPP

#include <map>
#include <string>
#include <vector>

#include "qgf/uq.hpp"

namespace qgf {

/// b -> <w|b>
Functional lambda_plus(const ParamSet& ps, const TWord& w);
/// b -> <b|w>
Functional rho_plus(const ParamSet& ps, const TWord& w);

struct PairingTable {
  int n = 0;
  std::vector<std::vector<Scalar>> LK;   // n x n, <T_i^i|T_j^j>
  std::vector<std::vector<Scalar>> SFE;  // (n-1)^2, <T_{i+1}^i|T_j^{j+1}>
  std::vector<std::vector<Scalar>> EF;   // r^-1 SFE
  std::vector<std::vector<Scalar>> FJS;  // -LK(i,j)^-1 SFE(i,j) LK(i+1,j+1)^-1
  /// <T_{i+1}^i|T_j^j> and <T_i^i|T_j^{j+1}> all vanish.
  bool off_terms_zero = true;
};

PairingTable pairing_table(const ParamSet& ps);

/// Names of closed forms that fail: "LK", "SFE", "EF", "FJS", "off".
std::vector<std::string> pairing_closed_form_failures(const ParamSet& ps, const PairingTable& t);

using SymbolCombination = std::map<std::string, Scalar>;

struct EfdResult {
  int i = 0, j = 0;
  bool holds = false;
  SymbolCombination lhs, rhs;
};

/// Expands (eps x e_i)(f_j x 1) over {f_j x e_i, L x K} and checks
/// kappa_j^{i+1} * expansion - kappa_{j+1}^i [f_j x e_i]
///   = delta_ij r^-1 (r-1) ([L_i x K_{i+1}] - [L_{i+1} x K_i]).
/// With transposed_subtrahend the second scalar is kappa_i^{j+1}.
std::vector<EfdResult> verify_efd(const ParamSet& ps, bool transposed_subtrahend = false);

/// (1-r)^2 r^-2 * r (r-1)^-1 = r^-1 (r-1), and e_i * f_j = (1-r)^2 r^-2 E * F
/// on words up to length D.
bool efd_eft_reconciliation(const ParamSet& ps, int D);

struct CrossExchangeResult {
  std::string relation;
  int i = 0, j = 0;
  IdentityResult result;
};

/// K_i f_j = kappa_{j+1}^i (kappa_j^i)^-1 f_j K_i,
/// e_i L_j = kappa_j^i (kappa_j^{i+1})^-1 L_j e_i, and K_i L_j = L_j K_i.
/// With stated_scalars the first two use kappa_j^i (kappa_{j+1}^i)^-1 and
/// kappa_i^j (kappa_{i+1}^j)^-1 instead.
std::vector<CrossExchangeResult> verify_cross_exchange(const ParamSet& ps, int D, bool stated_scalars = false);

}  // namespace qgf

#endif
