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

// One line per acceptance criterion. Every comparison is exact; the only
// numeric limits are the wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "qgf/cartan.hpp"
#include "qgf/dcross.hpp"
#include "qgf/grouplike.hpp"
#include "qgf/uq.hpp"
#include "qgf/ybr.hpp"

using namespace qgf;
using qgf::testing::noncentral_n2;
using qgf::testing::one_param_family;
using qgf::testing::random_params;
using qgf::testing::seven_fixture;

namespace {

constexpr double kBudgetYbe = 10.0;
constexpr double kBudgetHopf = 60.0;
constexpr double kBudgetCartan = 1.0;
constexpr double kBudgetGroup = 5.0;
constexpr double kBudgetPairing = 10.0;
constexpr double kBudgetCentrality = 30.0;
constexpr double kBudgetFinite = 1.0;
constexpr int kDegree = 3;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

std::string describe(const ParamSet& ps) {
  std::string s = "n=" + std::to_string(ps.n) + " m=" + std::to_string(ps.m) + " r=z^" +
                  std::to_string(ps.r_value.zeta_exp);
  for (const auto& [ij, v] : ps.p_values)
    s += " p" + std::to_string(ij.first) + std::to_string(ij.second) + "=z^" + std::to_string(v.zeta_exp);
  return s;
}

int failed = 0;

void criterion(int k, const std::string& title, double budget, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s >= budget) o.require(false, "over time budget");
  if (!o.pass) ++failed;
  std::printf("criterion %d: %s  %s  (%.2f s of %.0f s, exact)%s%s\n", k, o.pass ? "PASS" : "FAIL", title.c_str(), s,
              budget, o.pass ? "" : "  first failure: ", o.detail.c_str());
  for (const auto& n : o.notes) std::printf("    note: %s\n", n.c_str());
  std::fflush(stdout);
}

std::vector<ParamSet> random_sets(unsigned seed, const std::vector<int>& ns, int count, int max_m = 12) {
  std::mt19937 rng(seed);
  std::vector<ParamSet> out;
  for (int k = 0; k < count; ++k) out.push_back(random_params(rng, ns[k % ns.size()], max_m));
  return out;
}

std::vector<ParamSet> with_examples(std::vector<ParamSet> extra) {
  std::vector<ParamSet> out = {seven_fixture(), one_param_family(3)};
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

// Independent closure oracle: breadth-first search over sums of generators.
long closure_size(const std::vector<CharVector>& gens, long m) {
  std::set<CharVector> seen = {CharVector(gens[0].size(), 0)};
  std::vector<CharVector> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<CharVector> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        CharVector w = v;
        for (std::size_t t = 0; t < w.size(); ++t) w[t] = (w[t] + g[t]) % m;
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier.swap(next);
  }
  return static_cast<long>(seen.size());
}

Outcome ybe_suite() {
  Outcome o;
  auto sets = with_examples(random_sets(101, {2, 3, 4}, 24));
  for (const auto& ps : sets) o.require(check_ybe(build_R(ps)).holds, describe(ps));
  o.notes.push_back(std::to_string(sets.size()) + " parameter sets");
  return o;
}

Outcome hopf_suite() {
  Outcome o;
  auto sets = with_examples(random_sets(202, {2, 3}, 10));
  std::set<std::string> stated_fail, derived_fail;
  for (const auto& ps : sets) {
    for (const auto& c : hopf_relations(ps, kDegree, RelationForm::Stated)) {
      if (c.result.holds) continue;
      stated_fail.insert(c.relation);
      std::string w = c.result.witness ? " on " + word_str(*c.result.witness) : "";
      o.require(false, c.relation + " (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")" + w + " lhs " +
                           c.result.lhs_value + " rhs " + c.result.rhs_value + " for " + describe(ps));
    }
    for (const auto& c : hopf_relations(ps, kDegree, RelationForm::Derived))
      if (!c.result.holds) derived_fail.insert(c.relation);
    for (const auto& [name, u] : all_generators(ps))
      o.require(annihilates_relators(u, ps, kDegree).holds, "relator annihilation by " + name + " for " + describe(ps));
  }
  std::string pf;
  for (const auto& s : stated_fail) pf += " [" + s + "]";
  o.notes.push_back("relations failing as stated:" + (pf.empty() ? std::string(" none") : pf));
  o.notes.push_back(std::string("with the E F group-like side negated and the e L scalar kappa_j^i/kappa_j^{i+1}: ") +
                    (derived_fail.empty() ? "all hold" : "still failing"));
  return o;
}

Outcome cartan_suite() {
  Outcome o;
  std::vector<ParamSet> sets = {seven_fixture()};
  for (int n = 2; n <= 5; ++n) sets.push_back(one_param_family(n));
  for (const auto& ps : random_sets(303, {2, 3, 4, 5}, 12)) sets.push_back(ps);
  for (const auto& ps : sets) {
    const auto s = symmetrized(braid_matrix(ps));
    const Scalar one = Scalar::one(ps.field);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) {
        const std::size_t d = i > j ? i - j : j - i;
        o.require(s[i][j] == (d == 0 ? ps.r.pow(-2) : (d == 1 ? ps.r : one)), "pattern for " + describe(ps));
      }
    const CartanResult c = detect_type_A(s, ps.r.inverse());
    o.require(c.is_cartan && c.type == "A_" + std::to_string(ps.n - 1), "type for " + describe(ps));
  }
  return o;
}

Outcome group_suite() {
  Outcome o;
  const ParamSet seven = seven_fixture();
  const auto dg = check_dependent_generators(seven);
  o.require(dg.k3_relation, "K3 = K1^-2 K2^3");
  o.require(dg.kbar_relation, "Kbar1^2 = Kbar2");
  for (int n = 2; n <= 4; ++n) {
    const CharVector s = char_vec_sigma(one_param_family(n));
    o.require(s == CharVector(n, 0), "sigma = 1 for the one-parameter set, n=" + std::to_string(n));
  }
  for (const auto& ps : random_sets(404, {2, 3, 4}, 20))
    for (int i = 1; i <= ps.n; ++i)
      o.require(element_order(char_vec_K(ps, i), ps.m) == order_formula_K(ps, i), "K order for " + describe(ps));
  o.require(check_sigma_split(seven).ok(), "sigma split for the m=7 set");
  std::mt19937 rng(405);
  for (int k = 0; k < 30; ++k) {
    const long m = 2 + static_cast<long>(rng() % 11);
    const int n = 1 + static_cast<int>(rng() % 4);
    const int g = 1 + static_cast<int>(rng() % 3);
    std::vector<CharVector> gens(g, CharVector(n));
    for (auto& v : gens)
      for (auto& x : v) x = static_cast<long>(rng() % m);
    o.require(subgroup_invariants(gens, m).order == closure_size(gens, m), "SNF order vs closure");
  }
  return o;
}

Outcome pairing_suite() {
  Outcome o;
  auto sets = with_examples(random_sets(505, {2, 3}, 10));
  bool corrected_ok = true;
  for (const auto& ps : sets) {
    const auto fails = pairing_closed_form_failures(ps, pairing_table(ps));
    o.require(fails.empty(), "closed form " + (fails.empty() ? std::string() : fails.front()) + " for " + describe(ps));
    for (const auto& e : verify_efd(ps, true))
      o.require(e.holds, "efd (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") for " + describe(ps));
    for (const auto& e : verify_efd(ps, false)) corrected_ok = corrected_ok && e.holds;
    o.require(efd_eft_reconciliation(ps, kDegree), "(1-r)^2 r^-2 reconciliation for " + describe(ps));
  }
  o.notes.push_back(std::string("efd with subtrahend kappa^i_{j+1}: ") +
                    (corrected_ok ? "holds on every set" : "fails"));
  return o;
}

Outcome centrality_suite() {
  Outcome o;
  std::vector<ParamSet> sets = {seven_fixture(), noncentral_n2()};
  for (int n = 2; n <= 4; ++n) sets.push_back(one_param_family(n));
  for (const auto& ps : random_sets(606, {2, 3}, 8, 8)) sets.push_back(ps);
  int central = 0;
  for (const auto& ps : sets) {
    const CentralityReport c = sigma_centrality_check(ps, kDegree);
    if (!c.det_central) continue;
    ++central;
    o.require(c.commutes, "sigma not central for " + describe(ps));
  }
  const CentralityReport nc = sigma_centrality_check(noncentral_n2(), kDegree);
  o.require(!nc.det_central && !nc.commutes && nc.witness_word.has_value(), "no witness for the non-central set");
  if (nc.witness_word)
    o.notes.push_back("non-central witness: " + nc.witness_generator + " on " + word_str(*nc.witness_word));
  o.notes.push_back(std::to_string(central) + " sets with central determinant");
  return o;
}

Outcome finite_suite() {
  Outcome o;
  for (const auto& ps : with_examples(random_sets(707, {2, 3, 4}, 10)))
    o.require(is_finite_dimensional(ps), "root-of-unity set reported infinite: " + describe(ps));
  const ParamValue t = ParamValue::formal(0, 1);
  const ParamSet formal_r = build_params(2, t, {{{1, 2}, ParamValue::root(1)}}, 3);
  const ParamSet formal_p = build_params(3, ParamValue::root(1), {{{1, 2}, ParamValue::root(2)}, {{1, 3}, t},
                                                                  {{2, 3}, ParamValue::root(1)}}, 5);
  o.require(!is_finite_dimensional(formal_r), "r = t reported finite");
  o.require(!is_finite_dimensional(formal_p), "p13 = t reported finite");
  return o;
}

}  // namespace

int main() {
  criterion(1, "Yang-Baxter equation on examples and random sets", kBudgetYbe, ybe_suite);
  criterion(2, "Hopf relations at D=3 as stated", kBudgetHopf, hopf_suite);
  criterion(3, "symmetrized braiding is Cartan type A_{n-1}", kBudgetCartan, cartan_suite);
  criterion(4, "group-like identities, orders and invariants", kBudgetGroup, group_suite);
  criterion(5, "pairing closed forms and the efd identity", kBudgetPairing, pairing_suite);
  criterion(6, "central determinant implies central sigma", kBudgetCentrality, centrality_suite);
  criterion(7, "finite-dimensionality predicate", kBudgetFinite, finite_suite);
  std::printf("acceptance: %d of 7 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
