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
#include "qgf/dcross.hpp"

using namespace qgf;
using namespace qgf::testing;

namespace {

std::vector<ParamSet> sets() {
  std::vector<ParamSet> out = {seven_fixture(), one_param_family(3)};
  std::mt19937 rng(1234);
  for (int k = 0; k < 3; ++k) out.push_back(random_params(rng, 2 + k % 2, 9));
  return out;
}

}  // namespace

TEST_CASE("lambda+ on letters") {
  for (const auto& ps : sets()) {
    const Functional zero = Functional::zero(ps.n, ps.field);
    for (int i = 1; i <= ps.n; ++i)
      for (int j = 1; j <= ps.n; ++j) {
        const Functional lp = lambda_plus(ps, {{i, j}});
        if (i == j) CHECK(verify_identity(lp, gen_K(ps, i), 3).holds);
        else if (i == j + 1) CHECK(verify_identity(lp, normalized_e(ps, j), 3).holds);
        else if (i > j) CHECK(verify_identity(lp, zero, 3).holds == false);
        else CHECK(verify_identity(lp, zero, 3).holds);
      }
  }
}

TEST_CASE("rho+ on letters") {
  for (const auto& ps : sets()) {
    const Functional zero = Functional::zero(ps.n, ps.field);
    const Scalar one = Scalar::one(ps.field);
    for (int i = 1; i <= ps.n; ++i)
      for (int j = 1; j <= ps.n; ++j) {
        const Functional rp = rho_plus(ps, {{i, j}});
        if (i == j) {
          CHECK(verify_identity(rp, gen_L_inv(ps, i), 3).holds);
        } else if (j == i + 1) {
          const Functional sf = ps.r.pow(-2) * (ps.r - one) * antipode_inv_F(ps, i);
          CHECK(verify_identity(rp, Scalar::integer(ps.field, -1) * sf, 3).holds);
          CHECK_FALSE(verify_identity(rp, sf, 3).holds);
        } else if (i > j) {
          CHECK(verify_identity(rp, zero, 3).holds);
        }
      }
  }
}

TEST_CASE("lambda+ reverses products") {
  const ParamSet ps = seven_fixture();
  const TWord a = {{2, 1}}, b = {{1, 1}};
  const Functional ab = lambda_plus(ps, {{2, 1}, {1, 1}});
  CHECK(verify_identity(ab, lambda_plus(ps, b) * lambda_plus(ps, a), 3).holds);
  CHECK(verify_identity(lambda_plus(ps, {}), counit(ps), 2).holds);
}

TEST_CASE("pairing table closed forms") {
  for (const auto& ps : sets()) {
    const PairingTable t = pairing_table(ps);
    CHECK(pairing_closed_form_failures(ps, t).empty());
    CHECK(t.off_terms_zero);
  }
  const ParamSet ps = seven_fixture();
  PairingTable t = pairing_table(ps);
  t.FJS[0][0] = -t.FJS[0][0];
  CHECK(pairing_closed_form_failures(ps, t) == std::vector<std::string>{"FJS"});
}

TEST_CASE("EF through the squared antipode") {
  const ParamSet ps = seven_fixture();
  const PairingTable t = pairing_table(ps);
  for (int i = 1; i < 3; ++i) {
    CHECK(verify_identity(antipode_pm2_e(ps, i, -2), ps.r.inverse() * normalized_e(ps, i), 3).holds);
    CHECK(t.EF[i - 1][i - 1] == ps.r.inverse() * t.SFE[i - 1][i - 1]);
  }
}

TEST_CASE("double product coefficient identity") {
  for (const auto& ps : sets()) {
    for (const auto& res : verify_efd(ps)) {
      INFO(res.i << "," << res.j);
      CHECK(res.holds);
      if (res.i != res.j) CHECK(res.lhs.empty());
      else CHECK(res.lhs.size() == 2);
    }
  }
  // kappa_i^{j+1} in place of kappa_{j+1}^i breaks the i != j cases
  bool any_fail = false;
  for (const auto& res : verify_efd(seven_fixture(), true)) any_fail = any_fail || !res.holds;
  CHECK(any_fail);
}

TEST_CASE("reconciling the normalizations") {
  for (const auto& ps : sets()) CHECK(efd_eft_reconciliation(ps, 3));
}

TEST_CASE("cross exchange") {
  for (const auto& ps : sets()) {
    for (const auto& c : verify_cross_exchange(ps, 3)) {
      INFO(c.relation << " " << c.i << "," << c.j);
      CHECK(c.result.holds);
    }
  }
  std::size_t stated_failures = 0;
  for (const auto& c : verify_cross_exchange(seven_fixture(), 3, true)) stated_failures += c.result.holds ? 0 : 1;
  CHECK(stated_failures > 0);
  // equal kappa values make the K f scalar trivial
  const ParamSet ps = one_param_family(3);
  const auto k = kappa(ps);
  CHECK(k[0][1] == k[0][2]);
  CHECK(verify_identity(gen_K(ps, 1) * normalized_f(ps, 2), normalized_f(ps, 2) * gen_K(ps, 1), 3).holds);
}
