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

#include "doctest.h"
#include "fixtures.hpp"
#include "qgf/cartan.hpp"

using namespace qgf;
using namespace qgf::testing;

namespace {

void check_pattern(const ParamSet& ps) {
  const auto s = symmetrized(braid_matrix(ps));
  const int k = ps.n - 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) CHECK(s[i][j] == ps.r.pow(-2));
      else if (std::abs(i - j) == 1) CHECK(s[i][j] == ps.r);
      else CHECK(s[i][j].is_one());
    }
}

}  // namespace

TEST_CASE("diagonal coefficients") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const ParamSet ps = random_params(rng, 2 + trial % 4);
    const auto l = braid_matrix(ps);
    for (int i = 0; i < ps.n - 1; ++i) CHECK(l[i][i] == ps.r.inverse());
  }
}

TEST_CASE("one-parameter family n=3") {
  const ParamSet ps = one_param_family(3);
  const auto l = braid_matrix(ps);
  const Scalar q = Scalar::zeta(ps.field, 1);
  CHECK(l[0][0] == q.pow(-2));
  CHECK(l[1][1] == q.pow(-2));
  CHECK(l[0][1] * l[1][0] == q.pow(2));
}

TEST_CASE("two computation paths agree") {
  CHECK(braid_matrix(seven_fixture()) == braid_matrix_cases(seven_fixture()));
  std::mt19937 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const ParamSet ps = random_params(rng, 3 + trial % 3);
    CHECK(braid_matrix(ps) == braid_matrix_cases(ps));
  }
}

TEST_CASE("symmetrized pattern and type A") {
  check_pattern(seven_fixture());
  std::mt19937 rng(22);
  for (int trial = 0; trial < 16; ++trial) {
    const ParamSet ps = random_params(rng, 2 + trial % 4);
    check_pattern(ps);
    const CartanResult c = detect_type_A(symmetrized(braid_matrix(ps)), ps.r.inverse());
    CHECK(c.is_cartan);
    CHECK(c.type == "A_" + std::to_string(ps.n - 1));
  }
  const CartanResult c = detect_type_A(symmetrized(braid_matrix(seven_fixture())), seven_fixture().r.inverse());
  CHECK(c.type == "A_2");
  CHECK(c.a == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
}

TEST_CASE("s-matrix depends only on r") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const ParamSet a = random_params(rng, 4);
    std::map<IndexPair, long> p;
    for (const auto& [ij, v] : a.p_values) p[ij] = v.zeta_exp + 1;
    const ParamSet b = build_params(4, a.r_value.zeta_exp, p, a.m);
    CHECK(symmetrized(braid_matrix(a)) == symmetrized(braid_matrix(b)));
  }
}

TEST_CASE("single node and perturbation") {
  const auto f = CycloField::get(5);
  const Scalar r = Scalar::zeta(f, 2);
  const CartanResult one = detect_type_A({{r.pow(-2)}}, r.inverse());
  CHECK(one.is_cartan);
  CHECK(one.type == "A_1");
  const ParamSet ps = seven_fixture();
  auto s = symmetrized(braid_matrix(ps));
  s[0][1] = s[0][1] * ps.r;
  const CartanResult bad = detect_type_A(s, ps.r.inverse());
  CHECK_FALSE(bad.is_cartan);
  CHECK(bad.type == "NotCartan");
  CHECK(bad.witness == std::make_pair(1, 2));
  // formal parameters: pattern still holds
  const ParamSet formal = build_params(3, ParamValue::formal(0, 1), {{{1, 2}, ParamValue::root(1)}, {{1, 3}, ParamValue::formal(0, 2)}, {{2, 3}, ParamValue::root(2)}}, 3);
  check_pattern(formal);
}
