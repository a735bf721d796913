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

#ifndef QGF_TESTS_FIXTURES_HPP
#define QGF_TESTS_FIXTURES_HPP

#include <random>

#include "qgf/params.hpp"

namespace qgf::testing {

inline ParamSet seven_fixture() { return build_params(3, 1, {{{1, 2}, 2}, {{2, 3}, 2}, {{1, 3}, -1}}, 7); }

/// r = q^2, p_ij = q with q a primitive (n+1)-th root of unity.
inline ParamSet one_param_family(int n) {
  const int m = n + 1;
  std::map<IndexPair, long> p;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p[{i, j}] = 1;
  return build_params(n, 2, p, m);
}

inline ParamSet noncentral_n2() { return build_params(2, 1, {{{1, 2}, 2}}, 5); }

inline ParamSet random_params(std::mt19937& rng, int n, int max_m = 12) {
  std::uniform_int_distribution<int> mdist(2, max_m);
  const int m = mdist(rng);
  std::uniform_int_distribution<long> e(0, m - 1), r(1, m - 1);
  std::map<IndexPair, long> p;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p[{i, j}] = e(rng);
  return build_params(n, r(rng), p, m);
}

}  // namespace qgf::testing

#endif
