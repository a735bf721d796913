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

using namespace qgf;
using namespace qgf::testing;

TEST_CASE("n=3 m=7 fixture parameters") {
  const ParamSet ps = seven_fixture();
  const auto f = ps.field;
  const auto k = kappa(ps);
  CHECK(k[0][1] == Scalar::zeta(f, 2));   // kappa_2^1 = q^2
  CHECK(k[1][0] == Scalar::zeta(f, -1));  // kappa_1^2 = q_12 = q^-1
  for (int i = 0; i < 3; ++i) CHECK(k[i][i] == ps.r);
  CHECK(ps.q(1, 3) == Scalar::zeta(f, 2));
  CHECK(ps.q(2, 3) == Scalar::zeta(f, -1));
  CHECK(is_finite_dimensional(ps));
  const auto P = det_values(ps);
  for (const auto& x : P) CHECK(x == Scalar::zeta(f, 2));
  CHECK(det_is_central(ps));
}

TEST_CASE("one-parameter family") {
  for (int n : {2, 3, 4, 5}) {
    const ParamSet ps = one_param_family(n);
    for (const auto& x : det_values(ps)) CHECK(x.is_one());
    CHECK(det_is_central(ps));
  }
  const ParamSet ps = one_param_family(3);
  CHECK(ps.m == 4);
  CHECK(ps.q(1, 2) == Scalar::zeta(ps.field, 1));
}

TEST_CASE("non-central fixture") {
  const ParamSet ps = noncentral_n2();
  const auto P = det_values(ps);
  CHECK(P[0] == Scalar::zeta(ps.field, 3));
  CHECK(P[1].is_one());
  CHECK_FALSE(det_is_central(ps));
}

TEST_CASE("validation errors") {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of([] { build_params(2, 0, {{{1, 2}, 1}}, 5); }) == ErrorCode::REqualsOne);
  CHECK(code_of([] { build_params(2, 5, {{{1, 2}, 1}}, 5); }) == ErrorCode::REqualsOne);
  CHECK(code_of([] { build_params(3, 1, {{{1, 2}, 1}, {{2, 3}, 1}}, 5); }) == ErrorCode::MissingParameter);
  CHECK(code_of([] { build_params(2, ParamValue::root(1), {{{1, 2}, ParamValue::zero_value()}}, 5); }) ==
        ErrorCode::ZeroParameter);
  CHECK_THROWS_AS(build_params(1, 1, {}, 5), Error);
  CHECK_THROWS_AS(build_params(2, 1, {{{1, 2}, 1}, {{2, 1}, 1}}, 5), Error);
}

TEST_CASE("formal parameters") {
  const ParamSet a = build_params(2, ParamValue::formal(0, 1), {{{1, 2}, ParamValue::root(1)}}, 4);
  CHECK(a.formal());
  CHECK_FALSE(is_finite_dimensional(a));
  const ParamSet b = build_params(2, ParamValue::root(2), {{{1, 2}, ParamValue::formal(0, 1)}}, 4);
  CHECK_FALSE(is_finite_dimensional(b));
  CHECK_THROWS_AS(kappa_exponent(b, 1, 2), Error);
  // r = t is allowed even though its zeta exponent is 0
  CHECK(kappa(a)[0][0] == Scalar::indeterminate(a.field));
}

TEST_CASE("kappa and determinant properties") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const ParamSet ps = random_params(rng, 2 + trial % 3);
    const auto k = kappa(ps);
    CHECK(kappa(ps) == k);
    for (int i = 0; i < ps.n; ++i)
      for (int j = 0; j < ps.n; ++j) {
        if (i != j) CHECK(k[i][j] * k[j][i] == ps.r);
        CHECK(Scalar::zeta(ps.field, kappa_exponent(ps, i + 1, j + 1)) == k[i][j]);
      }
    for (const auto& [ij, p] : ps.p) CHECK(p * ps.q(ij.first, ij.second) == ps.r);
    CHECK(det_values(ps) == det_values_from_p(ps));
    CHECK(is_finite_dimensional(ps));
  }
}
