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

#ifndef QGF_GROUPLIKE_HPP
#define QGF_GROUPLIKE_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qgf/params.hpp"
#include "qgf/word.hpp"

namespace qgf {

/// Exponents of the diagonal values of a group-like, base zeta_m, reduced mod m.
using CharVector = std::vector<long>;

CharVector char_vec_K(const ParamSet& ps, int i);
CharVector char_vec_L(const ParamSet& ps, int i);
/// K_{i+1} - K_i, i.e. K_i^-1 K_{i+1}.
CharVector char_vec_Kbar(const ParamSet& ps, int i);
CharVector char_vec_sigma(const ParamSet& ps);

CharVector cv_add(const CharVector& a, const CharVector& b, long m);
CharVector cv_scale(const CharVector& a, long k, long m);

long element_order(const CharVector& v, long m);
/// lcm{N, N_ij : j != i}, with N the order of r and N_ij that of p_ij.
long order_formula_K(const ParamSet& ps, int i);

struct GroupInvariants {
  std::vector<long> factors;  // d_1 | d_2 | ... , all > 1
  long order = 1;
};

/// Diagonal of the Smith normal form, nonnegative, divisibility chain.
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> a);
GroupInvariants subgroup_invariants(const std::vector<CharVector>& gens, long m);

struct DependentGeneratorsReport {
  bool k3_relation = false;    // K_3 = K_1^-2 K_2^3
  bool kbar_relation = false;  // Kbar_1^2 = Kbar_2
  bool det_central = false;
  bool ok() const { return k3_relation && kbar_relation && det_central; }
};

/// The two group relations of the n=3, m=7 fixture.
DependentGeneratorsReport check_dependent_generators(const ParamSet& ps);

struct CoprimeOrderReport {
  bool applicable = false;
  std::vector<long> direct;   // order of Kbar_i
  std::vector<long> claimed;  // N m_i with m_i = M_{i+1} M_i
  std::vector<bool> match;
  bool claimed_distinct = false;
};

/// Compares orders of the Kbar_i with N M_{i+1} M_i when {N, N_ij} are
/// pairwise coprime. Mismatches are data.
CoprimeOrderReport check_coprime_orders(const ParamSet& ps);

struct SigmaSplitReport {
  bool applicable = false;
  bool orders_equal = false;
  long common_order = 0;
  bool split_checked = false;
  bool split_holds = false;
  long order_G = 0, order_sigma = 0, order_SLG = 0;
  bool ok() const { return applicable && orders_equal && (!split_checked || split_holds); }
};

/// With a central determinant: equal orders of the K_i, and
/// <K_1..K_n> = <sigma> (+) <Kbar_1..Kbar_{n-1}> when gcd(order, n) = 1.
SigmaSplitReport check_sigma_split(const ParamSet& ps);

struct CentralityReport {
  bool det_central = false;
  bool commutes = true;
  std::string witness_generator;
  std::optional<TWord> witness_word;
};

/// sigma * u = u * sigma for every generator u, on words up to length D.
CentralityReport sigma_centrality_check(const ParamSet& ps, int D);

}  // namespace qgf

#endif
