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

#ifndef QGF_FRT_HPP
#define QGF_FRT_HPP

#include <map>
#include <utility>
#include <vector>

#include "qgf/linalg.hpp"
#include "qgf/params.hpp"
#include "qgf/word.hpp"
#include "qgf/ybr.hpp"

namespace qgf {

/// Zero coefficients are never stored.
using TLinComb = std::map<TWord, Scalar>;
using TensorSum = std::map<std::pair<TWord, TWord>, Scalar>;

void add_term(TLinComb& a, const TWord& w, const Scalar& c);
void add_term(TensorSum& a, const std::pair<TWord, TWord>& w, const Scalar& c);
bool lin_equal(const TLinComb& a, const TLinComb& b);

/// Delta(T_i^j) = sum_k T_i^k (x) T_k^j, extended multiplicatively.
TensorSum coproduct(const TWord& w, int n, const FieldPtr& field);
TensorSum coproduct(const TLinComb& a, int n, const FieldPtr& field);

enum class RttConvention {
  /// sum R_ab^ij T_a^k T_b^l - sum T_i^a T_j^b R_kl^ab
  Direct,
  /// sum R_ij^ab T_a^k T_b^l - sum T_i^a T_j^b R_ab^kl
  Transposed,
};

constexpr RttConvention kShippedConvention = RttConvention::Transposed;

const char* convention_name(RttConvention c);

/// Degree-two relators, each scaled so its first coefficient is 1,
/// zeros and duplicates removed.
std::vector<TLinComb> rtt_relators(const ParamSet& ps, RttConvention conv = kShippedConvention);

/// Whether Delta(rho) lies in rel(x)A + A(x)rel on degree-two legs for
/// every relator rho.
bool relators_form_coideal(const ParamSet& ps, const std::vector<TLinComb>& relators);

/// Matrix on words of length t of b -> <T_i^l | b>.
SparseMatrix letter_pairing_matrix(const RMatrix& R, Letter a, int t);

/// <a|b> with <T_i^l|T_j^k> = R_ij^kl, <xy|c> = sum <x|c2><y|c1>,
/// <x|cd> = sum <x1|c><x2|d>, <1|c> = counit(c).
Scalar braid_pairing(const RMatrix& R, const TWord& a, const TWord& b);
Scalar braid_pairing(const ParamSet& ps, const TWord& a, const TWord& b);

}  // namespace qgf

#endif
