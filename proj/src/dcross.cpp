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

#include "qgf/dcross.hpp"

#include "qgf/ybr.hpp"

namespace qgf {

namespace {

std::string sym(const std::string& a, int i, const std::string& b, int j) {
  return a + std::to_string(i) + "|" + b + std::to_string(j);
}

void add(SymbolCombination& c, const std::string& key, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = c.find(key);
  if (it == c.end()) {
    c.emplace(key, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) c.erase(it);
}

bool same(const SymbolCombination& a, const SymbolCombination& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || it->second != v) return false;
  }
  return true;
}

}  // namespace

Functional lambda_plus(const ParamSet& ps, const TWord& w) {
  if (w.empty()) return counit(ps);
  const auto R = std::make_shared<const RMatrix>(build_R(ps));
  std::vector<Functional> factors;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Letter l = *it;
    factors.push_back(Functional::generated(ps.n, ps.field, [R, l](int s) { return letter_pairing_matrix(*R, l, s); }));
  }
  return Functional::convolution(factors);
}

Functional rho_plus(const ParamSet& ps, const TWord& w) {
  const auto R = std::make_shared<const RMatrix>(build_R(ps));
  const int n = ps.n;
  const FieldPtr field = ps.field;
  return Functional::generated(n, field, [R, w, n, field](int s) {
    const std::size_t size = ipow(n, s);
    SparseMatrix out(field, size, size);
    for (const auto& b : all_words(n, s)) {
      std::size_t row, col;
      word_position(b, n, &row, &col);
      out.add_to(row, col, braid_pairing(*R, b, w));
    }
    return out;
  });
}

PairingTable pairing_table(const ParamSet& ps) {
  const RMatrix R = build_R(ps);
  const int n = ps.n;
  const Scalar zero = Scalar::zero(ps.field);
  PairingTable t;
  t.n = n;
  t.LK.assign(n, std::vector<Scalar>(n, zero));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) t.LK[i - 1][j - 1] = braid_pairing(R, {{i, i}}, {{j, j}});
  t.SFE.assign(n - 1, std::vector<Scalar>(n - 1, zero));
  t.EF = t.SFE;
  t.FJS = t.SFE;
  const Scalar r_inv = ps.r.inverse();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      const Scalar sfe = braid_pairing(R, {{i + 1, i}}, {{j, j + 1}});
      t.SFE[i - 1][j - 1] = sfe;
      t.EF[i - 1][j - 1] = r_inv * sfe;
      t.FJS[i - 1][j - 1] = -(t.LK[i - 1][j - 1].inverse() * sfe * t.LK[i][j].inverse());
    }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!braid_pairing(R, {{i + 1, i}}, {{j, j}}).is_zero()) t.off_terms_zero = false;
      if (j < n && !braid_pairing(R, {{j, j}}, {{i, i + 1}}).is_zero()) t.off_terms_zero = false;
    }
  return t;
}

std::vector<std::string> pairing_closed_form_failures(const ParamSet& ps, const PairingTable& t) {
  std::vector<std::string> out;
  const KappaTable k = kappa(ps);
  const Scalar one = Scalar::one(ps.field), zero = Scalar::zero(ps.field);
  const Scalar rm1 = ps.r - one;
  bool lk = true, sfe = true, ef = true, fjs = true;
  for (int i = 0; i < ps.n; ++i)
    for (int j = 0; j < ps.n; ++j) lk = lk && t.LK[i][j] == k[i][j];
  for (int i = 0; i + 1 < ps.n; ++i)
    for (int j = 0; j + 1 < ps.n; ++j) {
      const Scalar d = i == j ? one : zero;
      sfe = sfe && t.SFE[i][j] == d * rm1;
      ef = ef && t.EF[i][j] == d * ps.r.inverse() * rm1;
      fjs = fjs && t.FJS[i][j] == -(d * ps.r.pow(-2) * rm1);
    }
  if (!lk) out.push_back("LK");
  if (!sfe) out.push_back("SFE");
  if (!ef) out.push_back("EF");
  if (!fjs) out.push_back("FJS");
  if (!t.off_terms_zero) out.push_back("off");
  return out;
}

std::vector<EfdResult> verify_efd(const ParamSet& ps, bool transposed_subtrahend) {
  const PairingTable t = pairing_table(ps);
  const KappaTable k = kappa(ps);
  auto kap = [&](int j, int i) { return k[i - 1][j - 1]; };  // kappa_j^i
  auto LK = [&](int i, int j) { return t.LK[i - 1][j - 1]; };
  const Scalar one = Scalar::one(ps.field);
  std::vector<EfdResult> out;
  for (int i = 1; i < ps.n; ++i)
    for (int j = 1; j < ps.n; ++j) {
      SymbolCombination expansion;
      add(expansion, sym("f", j, "e", i), LK(i, j + 1) * LK(i + 1, j).inverse());
      add(expansion, sym("L", j + 1, "K", i), LK(i, j + 1) * t.FJS[i - 1][j - 1]);
      add(expansion, sym("L", j, "K", i + 1), t.EF[i - 1][j - 1] * LK(i + 1, j).inverse());
      EfdResult res;
      res.i = i;
      res.j = j;
      for (const auto& [key, c] : expansion) add(res.lhs, key, kap(j, i + 1) * c);
      const Scalar sub = transposed_subtrahend ? kap(i, j + 1) : kap(j + 1, i);
      add(res.lhs, sym("f", j, "e", i), -sub);
      if (i == j) {
        const Scalar c = ps.r.inverse() * (ps.r - one);
        add(res.rhs, sym("L", i, "K", i + 1), c);
        add(res.rhs, sym("L", i + 1, "K", i), -c);
      }
      res.holds = same(res.lhs, res.rhs);
      out.push_back(std::move(res));
    }
  return out;
}

bool efd_eft_reconciliation(const ParamSet& ps, int D) {
  const Scalar one = Scalar::one(ps.field);
  const Scalar& r = ps.r;
  const Scalar factor = (one - r).pow(2) * r.pow(-2);
  if (factor * r / (r - one) != r.inverse() * (r - one)) return false;
  for (int i = 1; i < ps.n; ++i)
    for (int j = 1; j < ps.n; ++j) {
      const Functional ef = normalized_e(ps, i) * normalized_f(ps, j);
      const Functional EF = factor * (gen_E(ps, i) * gen_F(ps, j));
      if (!verify_identity(ef, EF, D).holds) return false;
      const Functional fe = normalized_f(ps, j) * normalized_e(ps, i);
      const Functional FE = factor * (gen_F(ps, j) * gen_E(ps, i));
      if (!verify_identity(fe, FE, D).holds) return false;
    }
  return true;
}

std::vector<CrossExchangeResult> verify_cross_exchange(const ParamSet& ps, int D, bool stated_scalars) {
  const KappaTable k = kappa(ps);
  auto kap = [&](int j, int i) { return k[i - 1][j - 1]; };
  std::vector<CrossExchangeResult> out;
  for (int i = 1; i <= ps.n; ++i)
    for (int j = 1; j < ps.n; ++j) {
      const Functional K = gen_K(ps, i), f = normalized_f(ps, j);
      const Scalar c = stated_scalars ? kap(j, i) / kap(j + 1, i) : kap(j + 1, i) / kap(j, i);
      out.push_back({"K f", i, j, verify_identity(K * f, c * (f * K), D)});
    }
  for (int i = 1; i < ps.n; ++i)
    for (int j = 1; j <= ps.n; ++j) {
      const Functional e = normalized_e(ps, i), L = gen_L(ps, j);
      const Scalar c = stated_scalars ? kap(i, j) / kap(i + 1, j) : kap(j, i) / kap(j, i + 1);
      out.push_back({"e L", i, j, verify_identity(e * L, c * (L * e), D)});
    }
  for (int i = 1; i <= ps.n; ++i)
    for (int j = 1; j <= ps.n; ++j) {
      out.push_back({"K L", i, j, verify_identity(gen_K(ps, i) * gen_L(ps, j), gen_L(ps, j) * gen_K(ps, i), D)});
    }
  return out;
}

}  // namespace qgf
