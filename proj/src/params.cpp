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

#include "qgf/params.hpp"

#include <string>

namespace qgf {

namespace {

Scalar value_of(const FieldPtr& f, const ParamValue& v) {
  if (v.zero) return Scalar::zero(f);
  return Scalar::monomial(f, v.zeta_exp, v.t_exp);
}

std::string pair_name(const IndexPair& ij) { return std::to_string(ij.first) + "," + std::to_string(ij.second); }

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Scalar ParamSet::q(int i, int j) const { return r / p.at({i, j}); }

bool ParamSet::formal() const {
  if (r_value.is_formal()) return true;
  for (const auto& [ij, v] : p_values) {
    if (v.is_formal()) return true;
  }
  return false;
}

ParamSet build_params(int n, ParamValue r, const std::map<IndexPair, ParamValue>& p, int m) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "m must be at least 2");
  if (r.zero) throw Error(ErrorCode::ZeroParameter, "r must be nonzero");
  if (!r.is_formal() && mod(r.zeta_exp, m) == 0) throw Error(ErrorCode::REqualsOne, "r = 1 is excluded");
  for (const auto& [ij, v] : p) {
    if (ij.first < 1 || ij.second > n || ij.first >= ij.second) {
      throw Error(ErrorCode::InvalidArgument, "parameter index " + pair_name(ij) + " is not a pair i<j in range");
    }
  }
  ParamSet ps{n, m, CycloField::get(m), r, {}, Scalar::zero(CycloField::get(m)), {}};
  ps.r = value_of(ps.field, r);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      auto it = p.find({i, j});
      if (it == p.end()) throw Error(ErrorCode::MissingParameter, "missing parameter p " + pair_name({i, j}));
      if (it->second.zero) throw Error(ErrorCode::ZeroParameter, "parameter p " + pair_name({i, j}) + " is zero");
      ParamValue v = it->second;
      if (!v.is_formal()) v.zeta_exp = mod(v.zeta_exp, m);
      ps.p_values[{i, j}] = v;
      ps.p.emplace(IndexPair{i, j}, value_of(ps.field, v));
    }
  }
  if (!ps.r_value.is_formal()) ps.r_value.zeta_exp = mod(ps.r_value.zeta_exp, m);
  return ps;
}

ParamSet build_params(int n, long r_exp, const std::map<IndexPair, long>& p_exps, int m) {
  std::map<IndexPair, ParamValue> p;
  for (const auto& [ij, e] : p_exps) p[ij] = ParamValue::root(e);
  return build_params(n, ParamValue::root(r_exp), p, m);
}

KappaTable kappa(const ParamSet& ps) {
  KappaTable k(ps.n, std::vector<Scalar>(ps.n, Scalar::zero(ps.field)));
  for (int i = 1; i <= ps.n; ++i) {
    for (int j = 1; j <= ps.n; ++j) {
      if (i < j) {
        k[i - 1][j - 1] = ps.p.at({i, j});
      } else if (i == j) {
        k[i - 1][j - 1] = ps.r;
      } else {
        k[i - 1][j - 1] = ps.q(j, i);
      }
    }
  }
  return k;
}

long kappa_exponent(const ParamSet& ps, int i, int j) {
  if (ps.formal()) throw Error(ErrorCode::FormalModeUnsupported, "exponents are undefined for formal parameters");
  if (i < j) return ps.p_values.at({i, j}).zeta_exp;
  if (i == j) return ps.r_value.zeta_exp;
  return mod(ps.r_value.zeta_exp - ps.p_values.at({j, i}).zeta_exp, ps.m);
}

bool is_finite_dimensional(const ParamSet& ps) {
  if (!mult_order(ps.r).is_finite()) return false;
  for (int i = 1; i <= ps.n; ++i) {
    for (int j = i + 1; j <= ps.n; ++j) {
      if (!mult_order(ps.q(i, j)).is_finite()) return false;
    }
  }
  return true;
}

std::vector<Scalar> det_values(const ParamSet& ps) {
  const KappaTable k = kappa(ps);
  std::vector<Scalar> out;
  for (int l = 0; l < ps.n; ++l) {
    Scalar prod = Scalar::one(ps.field);
    for (int j = 0; j < ps.n; ++j) prod *= k[l][j];
    out.push_back(prod);
  }
  return out;
}

std::vector<Scalar> det_values_from_p(const ParamSet& ps) {
  std::vector<Scalar> out;
  for (int l = 1; l <= ps.n; ++l) {
    Scalar prod = ps.r.pow(l);
    for (int j = 1; j <= ps.n; ++j) {
      if (l < j) prod *= ps.p.at({l, j});
      if (l > j) prod *= ps.p.at({j, l}).inverse();
    }
    out.push_back(prod);
  }
  return out;
}

bool det_is_central(const ParamSet& ps) {
  const auto P = det_values(ps);
  for (const auto& x : P) {
    if (x != P[0]) return false;
  }
  return true;
}

}  // namespace qgf
