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

#ifndef QGF_PARAMS_HPP
#define QGF_PARAMS_HPP

#include <map>
#include <utility>
#include <vector>

#include "qgf/scalar.hpp"

namespace qgf {

/// zeta_m^zeta_exp * t^t_exp, or zero.
struct ParamValue {
  long zeta_exp = 0;
  long t_exp = 0;
  bool zero = false;

  static ParamValue root(long k) { return {k, 0, false}; }
  static ParamValue formal(long zeta_exp, long t_exp) { return {zeta_exp, t_exp, false}; }
  static ParamValue zero_value() { return {0, 0, true}; }
  bool is_formal() const noexcept { return !zero && t_exp != 0; }
};

using IndexPair = std::pair<int, int>;

struct ParamSet {
  int n = 0;
  int m = 0;
  FieldPtr field;
  ParamValue r_value;
  std::map<IndexPair, ParamValue> p_values;
  Scalar r;
  std::map<IndexPair, Scalar> p;

  /// q_ij = r / p_ij for i < j.
  Scalar q(int i, int j) const;
  bool formal() const;
};

using KappaTable = std::vector<std::vector<Scalar>>;

ParamSet build_params(int n, ParamValue r, const std::map<IndexPair, ParamValue>& p, int m);
ParamSet build_params(int n, long r_exp, const std::map<IndexPair, long>& p_exps, int m);

/// table[i-1][j-1] = kappa_j^i.
KappaTable kappa(const ParamSet& ps);
/// Exponent of kappa_j^i in base zeta_m (Cyclo mode only), reduced mod m.
long kappa_exponent(const ParamSet& ps, int i, int j);

bool is_finite_dimensional(const ParamSet& ps);

/// P_l = prod_j kappa_j^l.
std::vector<Scalar> det_values(const ParamSet& ps);
/// P_l = r^l prod_j p_{l,j} with p_ii = 1, p_ji = p_ij^{-1}.
std::vector<Scalar> det_values_from_p(const ParamSet& ps);
bool det_is_central(const ParamSet& ps);

}  // namespace qgf

#endif
