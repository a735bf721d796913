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
#include "qgf/frt.hpp"

using namespace qgf;
using namespace qgf::testing;

namespace {

TWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> d(1, n);
  TWord w;
  for (int k = 0; k < len; ++k) w.push_back({d(rng), d(rng)});
  return w;
}

TWord concat(TWord a, const TWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("coproduct on words") {
  const auto f = CycloField::get(3);
  const TensorSum d = coproduct(TWord{{1, 2}}, 2, f);
  REQUIRE(d.size() == 2);
  CHECK(d.at({{{1, 1}}, {{1, 2}}}).is_one());
  CHECK(d.at({{{1, 2}}, {{2, 2}}}).is_one());
  const TensorSum e = coproduct(TWord{}, 2, f);
  REQUIRE(e.size() == 1);
  CHECK(e.begin()->first == std::make_pair(TWord{}, TWord{}));
  const TensorSum g = coproduct(TWord{{1, 1}, {2, 2}}, 2, f);
  CHECK(g.size() == 4);
  CHECK(g.count({{{1, 2}, {2, 1}}, {{2, 1}, {1, 2}}}) == 1);
}

TEST_CASE("coassociativity up to length 3") {
  const int n = 2;
  const auto f = CycloField::get(3);
  for (int s = 0; s <= 3; ++s) {
    for (const auto& w : all_words(n, s)) {
      std::map<std::vector<TWord>, int> left, right;
      for (const auto& [ab, c] : coproduct(w, n, f)) {
        for (const auto& [xy, d] : coproduct(ab.first, n, f)) left[{xy.first, xy.second, ab.second}] += 1;
        for (const auto& [xy, d] : coproduct(ab.second, n, f)) right[{ab.first, xy.first, xy.second}] += 1;
      }
      CHECK(left == right);
    }
  }
}

TEST_CASE("relators in the one-parameter case") {
  // r T_1^1 T_1^2 = kappa_1^2 T_1^2 T_1^1
  const ParamSet ps = build_params(2, 2, {{{1, 2}, 1}}, 3);
  const auto rel = rtt_relators(ps);
  const auto k = kappa(ps);
  bool found = false;
  for (const auto& r : rel) {
    if (r.size() == 2 && r.count({{1, 1}, {1, 2}}) && r.count({{1, 2}, {1, 1}})) {
      const Scalar ratio = -r.at({{1, 2}, {1, 1}}) / r.at({{1, 1}, {1, 2}});
      CHECK(ratio == k[1][0] / ps.r);
      found = true;
    }
  }
  CHECK(found);
  for (const auto& r : rel) CHECK(r.begin()->second.is_one());
}

TEST_CASE("relators form a coideal") {
  CHECK(relators_form_coideal(seven_fixture(), rtt_relators(seven_fixture())));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    const ParamSet ps = random_params(rng, 2 + trial % 2);
    for (auto conv : {RttConvention::Direct, RttConvention::Transposed}) {
      CHECK(relators_form_coideal(ps, rtt_relators(ps, conv)));
    }
  }
  // A lone non-relator fails the test.
  const ParamSet ps = seven_fixture();
  TLinComb fake;
  add_term(fake, {{1, 2}, {2, 1}}, Scalar::one(ps.field));
  CHECK_FALSE(relators_form_coideal(ps, {fake}));
}

TEST_CASE("pairing letter values") {
  const ParamSet ps = seven_fixture();
  const RMatrix R = build_R(ps);
  const auto k = kappa(ps);
  const Scalar rm1 = ps.r - Scalar::one(ps.field);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      CHECK(braid_pairing(R, {{i, i}}, {{j, j}}) == k[i - 1][j - 1]);
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) CHECK(braid_pairing(R, {{i, a}}, {{j, b}}) == R.entry(i, j, b, a));
    }
  for (int i = 1; i < 3; ++i)
    for (int j = 1; j < 3; ++j) {
      CHECK(braid_pairing(R, {{i + 1, i}}, {{j, j + 1}}) == (i == j ? rm1 : Scalar::zero(ps.field)));
    }
  CHECK(braid_pairing(R, {}, {}).is_one());
  CHECK(braid_pairing(R, {}, {{1, 2}}).is_zero());
  // the unit pairs through the counit
  CHECK(braid_pairing(R, {}, {{1, 1}}).is_one());
}

TEST_CASE("pairing bialgebra laws") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 6; ++trial) {
    const ParamSet ps = random_params(rng, 2 + trial % 2);
    const RMatrix R = build_R(ps);
    const int n = ps.n;
    for (int rep = 0; rep < 5; ++rep) {
      const TWord a = random_word(rng, n, 1 + rep % 2), b = random_word(rng, n, 1);
      const TWord c = random_word(rng, n, 1 + rep % 3);
      // <ab|c> = sum <a|c2><b|c1>
      Scalar lhs = braid_pairing(R, concat(a, b), c);
      Scalar rhs = Scalar::zero(ps.field);
      for (const auto& [c12, coef] : coproduct(c, n, ps.field)) {
        rhs += coef * braid_pairing(R, a, c12.second) * braid_pairing(R, b, c12.first);
      }
      CHECK(lhs == rhs);
      // <a|cd> = sum <a1|c><a2|d>
      const TWord d = random_word(rng, n, 1);
      lhs = braid_pairing(R, a, concat(c, d));
      rhs = Scalar::zero(ps.field);
      for (const auto& [a12, coef] : coproduct(a, n, ps.field)) {
        rhs += coef * braid_pairing(R, a12.first, c) * braid_pairing(R, a12.second, d);
      }
      CHECK(lhs == rhs);
    }
  }
}
