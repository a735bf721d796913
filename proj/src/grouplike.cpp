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

#include "qgf/grouplike.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qgf/uq.hpp"

namespace qgf {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

void require_cyclo(const ParamSet& ps) {
  if (ps.formal()) throw Error(ErrorCode::FormalModeUnsupported, "group-like exponents need root-of-unity parameters");
}

long exp_order(long e, long m) { return m / std::gcd(mod(e, m), m); }

}  // namespace

CharVector char_vec_K(const ParamSet& ps, int i) {
  require_cyclo(ps);
  if (i < 1 || i > ps.n) throw Error(ErrorCode::IndexOutOfRange, "K index out of range");
  CharVector v;
  for (int j = 1; j <= ps.n; ++j) v.push_back(kappa_exponent(ps, i, j));
  return v;
}

CharVector char_vec_L(const ParamSet& ps, int i) {
  require_cyclo(ps);
  if (i < 1 || i > ps.n) throw Error(ErrorCode::IndexOutOfRange, "L index out of range");
  CharVector v;
  for (int j = 1; j <= ps.n; ++j) v.push_back(mod(-kappa_exponent(ps, j, i), ps.m));
  return v;
}

CharVector char_vec_Kbar(const ParamSet& ps, int i) {
  if (i < 1 || i >= ps.n) throw Error(ErrorCode::IndexOutOfRange, "Kbar index out of range");
  return cv_add(char_vec_K(ps, i + 1), cv_scale(char_vec_K(ps, i), -1, ps.m), ps.m);
}

CharVector char_vec_sigma(const ParamSet& ps) {
  CharVector s(ps.n, 0);
  for (int i = 1; i <= ps.n; ++i) s = cv_add(s, char_vec_K(ps, i), ps.m);
  return s;
}

CharVector cv_add(const CharVector& a, const CharVector& b, long m) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "character vectors differ in length");
  CharVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = mod(a[k] + b[k], m);
  return out;
}

CharVector cv_scale(const CharVector& a, long k, long m) {
  CharVector out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = mod(a[j] * k, m);
  return out;
}

long element_order(const CharVector& v, long m) {
  long order = 1;
  for (long e : v) order = std::lcm(order, exp_order(e, m));
  return order;
}

long order_formula_K(const ParamSet& ps, int i) {
  require_cyclo(ps);
  long order = exp_order(ps.r_value.zeta_exp, ps.m);
  for (int j = 1; j <= ps.n; ++j) {
    if (j == i) continue;
    const auto& pv = ps.p_values.at({std::min(i, j), std::max(i, j)});
    order = std::lcm(order, exp_order(pv.zeta_exp, ps.m));
  }
  return order;
}

std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the remaining block becomes the pivot
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        while (diag.size() < std::min(rows, cols)) diag.push_back(0);
        return diag;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the rest of the block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

GroupInvariants subgroup_invariants(const std::vector<CharVector>& gens, long m) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one generator");
  const std::size_t n = gens[0].size();
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& g : gens) {
    if (g.size() != n) throw Error(ErrorCode::DimensionMismatch, "generators differ in length");
    std::vector<mpz_class> row;
    for (long e : g) row.emplace_back(mod(e, m));
    rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<mpz_class> row(n, 0);
    row[k] = m;
    rows.push_back(std::move(row));
  }
  GroupInvariants out;
  for (const auto& d : smith_diagonal(rows)) {
    const long f = m / d.get_si();
    if (f > 1) out.factors.push_back(f);
    out.order *= f;
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

DependentGeneratorsReport check_dependent_generators(const ParamSet& ps) {
  if (ps.n != 3) throw Error(ErrorCode::InvalidArgument, "relations are stated for n = 3");
  const long m = ps.m;
  DependentGeneratorsReport rep;
  const CharVector k1 = char_vec_K(ps, 1), k2 = char_vec_K(ps, 2), k3 = char_vec_K(ps, 3);
  rep.k3_relation = k3 == cv_add(cv_scale(k1, -2, m), cv_scale(k2, 3, m), m);
  rep.kbar_relation = cv_scale(char_vec_Kbar(ps, 1), 2, m) == char_vec_Kbar(ps, 2);
  rep.det_central = det_is_central(ps);
  return rep;
}

CoprimeOrderReport check_coprime_orders(const ParamSet& ps) {
  require_cyclo(ps);
  const int n = ps.n;
  CoprimeOrderReport rep;
  const long N = exp_order(ps.r_value.zeta_exp, ps.m);
  std::map<IndexPair, long> Nij;
  std::vector<long> all = {N};
  for (const auto& [ij, v] : ps.p_values) {
    Nij[ij] = exp_order(v.zeta_exp, ps.m);
    all.push_back(Nij[ij]);
  }
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (std::gcd(all[a], all[b]) != 1) return rep;
  rep.applicable = true;
  std::vector<long> M(n + 2, 1);
  for (int i = 1; i < n; ++i) {
    M[i] = 1;
    for (int j = i + 1; j <= n; ++j) M[i] *= Nij[{i, j}];
  }
  for (int i = 1; i < n; ++i) {
    rep.direct.push_back(element_order(char_vec_Kbar(ps, i), ps.m));
    rep.claimed.push_back(N * M[i + 1] * M[i]);
    rep.match.push_back(rep.direct.back() == rep.claimed.back());
  }
  std::set<long> distinct(rep.claimed.begin(), rep.claimed.end());
  rep.claimed_distinct = distinct.size() == rep.claimed.size();
  return rep;
}

SigmaSplitReport check_sigma_split(const ParamSet& ps) {
  require_cyclo(ps);
  SigmaSplitReport rep;
  if (!det_is_central(ps)) return rep;
  rep.applicable = true;
  const long m = ps.m;
  std::vector<CharVector> K, Kbar;
  for (int i = 1; i <= ps.n; ++i) K.push_back(char_vec_K(ps, i));
  for (int i = 1; i < ps.n; ++i) Kbar.push_back(char_vec_Kbar(ps, i));
  rep.common_order = element_order(K[0], m);
  rep.orders_equal = std::all_of(K.begin(), K.end(), [&](const CharVector& v) { return element_order(v, m) == rep.common_order; });
  const CharVector sigma = char_vec_sigma(ps);
  rep.order_G = subgroup_invariants(K, m).order;
  rep.order_sigma = subgroup_invariants({sigma}, m).order;
  rep.order_SLG = subgroup_invariants(Kbar, m).order;
  if (rep.orders_equal && std::gcd(rep.common_order, static_cast<long>(ps.n)) == 1) {
    rep.split_checked = true;
    std::vector<CharVector> joint = Kbar;
    joint.push_back(sigma);
    const long order_joint = subgroup_invariants(joint, m).order;
    // sigma and SLG generate G, and the product of orders forces a trivial intersection
    std::vector<CharVector> everything = K;
    everything.insert(everything.end(), joint.begin(), joint.end());
    const long order_all = subgroup_invariants(everything, m).order;
    rep.split_holds = order_all == rep.order_G && order_joint == rep.order_G &&
                      rep.order_G == rep.order_sigma * rep.order_SLG;
  }
  return rep;
}

CentralityReport sigma_centrality_check(const ParamSet& ps, int D) {
  require_cyclo(ps);
  CentralityReport rep;
  rep.det_central = det_is_central(ps);
  std::vector<Functional> ks;
  for (int i = 1; i <= ps.n; ++i) ks.push_back(gen_K(ps, i));
  const Functional sigma = Functional::convolution(ks);
  for (const auto& [name, u] : all_generators(ps)) {
    const IdentityResult res = verify_identity(sigma * u, u * sigma, D);
    if (!res.holds) {
      rep.commutes = false;
      rep.witness_generator = name;
      rep.witness_word = res.witness;
      return rep;
    }
  }
  return rep;
}

}  // namespace qgf
