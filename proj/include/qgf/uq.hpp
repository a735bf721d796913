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

#ifndef QGF_UQ_HPP
#define QGF_UQ_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgf/frt.hpp"
#include "qgf/linalg.hpp"
#include "qgf/params.hpp"
#include "qgf/word.hpp"

namespace qgf {

/// A linear functional on words in the T_i^j. On words of length s it is an
/// n^s x n^s matrix indexed as in word_position, so convolution is the
/// matrix product. Matrices are computed lazily and cached per length.
class Functional {
 public:
  struct Node;
  using Generator = std::function<SparseMatrix(int)>;

  static Functional zero(int n, FieldPtr field);
  /// Multiplicative on words; value[i] on T_i^i, zero off the diagonal.
  static Functional character(int n, FieldPtr field, std::vector<Scalar> values);
  /// u(l_1..l_s) = sum_t left(l_1..l_{t-1}) [l_t = target] right(l_{t+1}..l_s).
  static Functional skew_primitive(int n, FieldPtr field, Letter target, std::vector<Scalar> left,
                                   std::vector<Scalar> right);
  /// Matrices supplied by a callback.
  static Functional generated(int n, FieldPtr field, Generator gen);
  static Functional convolution(const std::vector<Functional>& factors);
  static Functional linear(const std::vector<std::pair<Scalar, Functional>>& terms);

  int n() const noexcept;
  const FieldPtr& field() const noexcept;
  const SparseMatrix& matrix(int s) const;
  Scalar operator()(const TWord& w) const;
  /// Diagonal values if this is a character node.
  const std::vector<Scalar>* character_values() const noexcept;

  Functional operator*(const Functional& o) const { return convolution({*this, o}); }
  Functional operator+(const Functional& o) const;
  Functional operator-(const Functional& o) const;
  Functional scaled(const Scalar& c) const;

 private:
  explicit Functional(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Functional operator*(const Scalar& c, const Functional& u) { return u.scaled(c); }

Functional counit(const ParamSet& ps);
Functional gen_K(const ParamSet& ps, int i);
Functional gen_L(const ParamSet& ps, int i);
Functional gen_K_inv(const ParamSet& ps, int i);
Functional gen_L_inv(const ParamSet& ps, int i);
/// E_{i+1}^i, 1 <= i <= n-1.
Functional gen_E(const ParamSet& ps, int i);
/// F_i^{i+1}, 1 <= i <= n-1.
Functional gen_F(const ParamSet& ps, int i);
/// e_i = (r-1) E_{i+1}^i
Functional normalized_e(const ParamSet& ps, int i);
/// f_i = r^-2 (r-1) F_i^{i+1}
Functional normalized_f(const ParamSet& ps, int i);

Functional antipode_grouplike(const Functional& g);
/// power -1: -K_i^-1 e_i K_{i+1}^-1; power -2: K_{i+1} K_i^-1 e_i K_{i+1}^-1 K_i.
Functional antipode_pm2_e(const ParamSet& ps, int i, int power);
/// -L_{j+1}^-1 F_j^{j+1} L_j^-1
Functional antipode_inv_F(const ParamSet& ps, int j);

struct IdentityResult {
  bool holds = true;
  std::optional<TWord> witness;
  std::string lhs_value, rhs_value;
};

/// Compares on all words of length 0..D. Agreement here is necessary, not
/// sufficient, for equality on the quotient by the relators.
IdentityResult verify_identity(const Functional& lhs, const Functional& rhs, int D);

struct AnnihilationResult {
  bool holds = true;
  std::optional<TWord> witness_prefix, witness_suffix;
  std::size_t relator_index = 0;
};

/// u(x rho y) = 0 for every relator rho and len(x) + len(y) <= D - 2.
AnnihilationResult annihilates_relators(const Functional& u, const std::vector<TLinComb>& relators, int D);
AnnihilationResult annihilates_relators(const Functional& u, const ParamSet& ps, int D,
                                        RttConvention conv = kShippedConvention);

/// K_i, L_i, E, F for every valid index.
std::vector<std::pair<std::string, Functional>> all_generators(const ParamSet& ps);

/// The unique convention whose relators every generator annihilates on all
/// samples; throws ConventionAmbiguous otherwise.
RttConvention select_convention(const std::vector<ParamSet>& samples, int D);

enum class RelationForm {
  /// e L with kappa_j^i (kappa_j^{i+1})^-1, E F with the group-like side negated
  Derived,
  /// e L with kappa_i^j (kappa_{i+1}^j)^-1, E F with +delta_ij r (r-1)^-1
  Stated,
};

struct RelationCheck {
  std::string relation;  // "K E", "e L", "E F", "S^-2 e"
  int i = 0, j = 0;
  IdentityResult result;
};

/// kappa_{j+1}^i K_i E_j = kappa_j^i E_j K_i, the e L exchange,
/// kappa_j^{i+1} E_i F_j - kappa_{j+1}^i F_j E_i = +-delta_ij r (r-1)^-1 (L_i K_{i+1} - L_{i+1} K_i)
/// and S^-2 e_i = r^-1 e_i, on words up to length D.
std::vector<RelationCheck> hopf_relations(const ParamSet& ps, int D, RelationForm form);

/// Least k <= min(kmax, D) with E^k zero on words of length <= D.
std::optional<int> nilpotency_probe(const ParamSet& ps, int i, int D, int kmax);

}  // namespace qgf

#endif
