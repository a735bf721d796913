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

#include "qgf/uq.hpp"

#include <map>
#include <mutex>

namespace qgf {

struct Functional::Node {
  enum class Kind { Character, SkewPrimitive, Generated, Convolution, Linear };

  Kind kind;
  int n;
  FieldPtr field;
  std::vector<Scalar> values;  // character values, or left companion
  std::vector<Scalar> right;   // right companion
  Letter target{1, 1};
  Generator gen;
  std::vector<Functional> children;
  std::vector<Scalar> coeffs;

  mutable std::mutex mu;
  mutable std::map<int, SparseMatrix> cache;

  Node(Kind k, int n_, FieldPtr f) : kind(k), n(n_), field(std::move(f)) {}

  SparseMatrix compute(int s) const;
};

namespace {

SparseMatrix diag_power(const FieldPtr& f, const std::vector<Scalar>& d, int t) {
  SparseMatrix out = SparseMatrix::identity(f, 1);
  const SparseMatrix base = SparseMatrix::diagonal(f, d);
  for (int k = 0; k < t; ++k) out = out.kron(base);
  return out;
}

}  // namespace

SparseMatrix Functional::Node::compute(int s) const {
  const std::size_t size = ipow(n, s);
  switch (kind) {
    case Kind::Character:
      return diag_power(field, values, s);
    case Kind::SkewPrimitive: {
      SparseMatrix out(field, size, size);
      SparseMatrix unit(field, n, n);
      unit.add_to(target.row - 1, target.col - 1, Scalar::one(field));
      for (int t = 0; t < s; ++t) {
        out = out + diag_power(field, values, t).kron(unit).kron(diag_power(field, right, s - 1 - t));
      }
      return out;
    }
    case Kind::Generated:
      return gen(s);
    case Kind::Convolution: {
      SparseMatrix out = SparseMatrix::identity(field, size);
      for (const auto& c : children) out = out * c.matrix(s);
      return out;
    }
    case Kind::Linear: {
      SparseMatrix out(field, size, size);
      for (std::size_t k = 0; k < children.size(); ++k) out = out + children[k].matrix(s).scaled(coeffs[k]);
      return out;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown functional kind");
}

Functional Functional::zero(int n, FieldPtr field) {
  return Functional(std::make_shared<Node>(Node::Kind::Linear, n, std::move(field)));
}

Functional Functional::character(int n, FieldPtr field, std::vector<Scalar> values) {
  if (static_cast<int>(values.size()) != n) throw Error(ErrorCode::DimensionMismatch, "character needs n values");
  auto node = std::make_shared<Node>(Node::Kind::Character, n, std::move(field));
  node->values = std::move(values);
  return Functional(node);
}

Functional Functional::skew_primitive(int n, FieldPtr field, Letter target, std::vector<Scalar> left,
                                      std::vector<Scalar> right) {
  if (target.row < 1 || target.row > n || target.col < 1 || target.col > n) {
    throw Error(ErrorCode::IndexOutOfRange, "skew-primitive target out of range");
  }
  auto node = std::make_shared<Node>(Node::Kind::SkewPrimitive, n, std::move(field));
  node->target = target;
  node->values = std::move(left);
  node->right = std::move(right);
  return Functional(node);
}

Functional Functional::generated(int n, FieldPtr field, Generator gen) {
  auto node = std::make_shared<Node>(Node::Kind::Generated, n, std::move(field));
  node->gen = std::move(gen);
  return Functional(node);
}

Functional Functional::convolution(const std::vector<Functional>& factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "empty convolution");
  auto node = std::make_shared<Node>(Node::Kind::Convolution, factors[0].n(), factors[0].field());
  node->children = factors;
  return Functional(node);
}

Functional Functional::linear(const std::vector<std::pair<Scalar, Functional>>& terms) {
  if (terms.empty()) throw Error(ErrorCode::InvalidArgument, "empty linear combination");
  auto node = std::make_shared<Node>(Node::Kind::Linear, terms[0].second.n(), terms[0].second.field());
  for (const auto& [c, u] : terms) {
    node->coeffs.push_back(c);
    node->children.push_back(u);
  }
  return Functional(node);
}

int Functional::n() const noexcept { return node_->n; }
const FieldPtr& Functional::field() const noexcept { return node_->field; }

const SparseMatrix& Functional::matrix(int s) const {
  {
    std::lock_guard<std::mutex> lock(node_->mu);
    auto it = node_->cache.find(s);
    if (it != node_->cache.end()) return it->second;
  }
  SparseMatrix m = node_->compute(s);
  std::lock_guard<std::mutex> lock(node_->mu);
  return node_->cache.emplace(s, std::move(m)).first->second;
}

Scalar Functional::operator()(const TWord& w) const {
  std::size_t row, col;
  word_position(w, n(), &row, &col);
  return matrix(static_cast<int>(w.size())).at(row, col);
}

const std::vector<Scalar>* Functional::character_values() const noexcept {
  return node_->kind == Node::Kind::Character ? &node_->values : nullptr;
}

Functional Functional::operator+(const Functional& o) const {
  return linear({{Scalar::one(field()), *this}, {Scalar::one(field()), o}});
}

Functional Functional::operator-(const Functional& o) const {
  return linear({{Scalar::one(field()), *this}, {Scalar::integer(field(), -1), o}});
}

Functional Functional::scaled(const Scalar& c) const { return linear({{c, *this}}); }


namespace {

void check_index(int i, int hi) {
  if (i < 1 || i > hi) throw Error(ErrorCode::IndexOutOfRange, "generator index out of range");
}

std::vector<Scalar> K_values(const ParamSet& ps, int i) {
  const KappaTable k = kappa(ps);
  return k[i - 1];
}

std::vector<Scalar> L_values(const ParamSet& ps, int i) {
  const KappaTable k = kappa(ps);
  std::vector<Scalar> out;
  for (int j = 1; j <= ps.n; ++j) out.push_back(k[j - 1][i - 1].inverse());
  return out;
}

std::vector<Scalar> inverted(std::vector<Scalar> v) {
  for (auto& x : v) x = x.inverse();
  return v;
}

}  // namespace

Functional counit(const ParamSet& ps) {
  return Functional::character(ps.n, ps.field, std::vector<Scalar>(ps.n, Scalar::one(ps.field)));
}

Functional gen_K(const ParamSet& ps, int i) {
  check_index(i, ps.n);
  return Functional::character(ps.n, ps.field, K_values(ps, i));
}

Functional gen_L(const ParamSet& ps, int i) {
  check_index(i, ps.n);
  return Functional::character(ps.n, ps.field, L_values(ps, i));
}

Functional gen_K_inv(const ParamSet& ps, int i) {
  check_index(i, ps.n);
  return Functional::character(ps.n, ps.field, inverted(K_values(ps, i)));
}

Functional gen_L_inv(const ParamSet& ps, int i) {
  check_index(i, ps.n);
  return Functional::character(ps.n, ps.field, inverted(L_values(ps, i)));
}

Functional gen_E(const ParamSet& ps, int i) {
  check_index(i, ps.n - 1);
  return Functional::skew_primitive(ps.n, ps.field, Letter{i, i + 1}, K_values(ps, i + 1), K_values(ps, i));
}

Functional gen_F(const ParamSet& ps, int i) {
  check_index(i, ps.n - 1);
  return Functional::skew_primitive(ps.n, ps.field, Letter{i + 1, i}, L_values(ps, i), L_values(ps, i + 1));
}

Functional normalized_e(const ParamSet& ps, int i) { return (ps.r - Scalar::one(ps.field)) * gen_E(ps, i); }

Functional normalized_f(const ParamSet& ps, int i) {
  return (ps.r.pow(-2) * (ps.r - Scalar::one(ps.field))) * gen_F(ps, i);
}

Functional antipode_grouplike(const Functional& g) {
  const auto* v = g.character_values();
  if (!v) throw Error(ErrorCode::InvalidArgument, "antipode_grouplike needs a character");
  return Functional::character(g.n(), g.field(), inverted(*v));
}

Functional antipode_pm2_e(const ParamSet& ps, int i, int power) {
  const Functional e = normalized_e(ps, i);
  if (power == -1) {
    return Scalar::integer(ps.field, -1) * Functional::convolution({gen_K_inv(ps, i), e, gen_K_inv(ps, i + 1)});
  }
  if (power == -2) {
    return Functional::convolution(
        {gen_K(ps, i + 1), gen_K_inv(ps, i), e, gen_K_inv(ps, i + 1), gen_K(ps, i)});
  }
  throw Error(ErrorCode::InvalidArgument, "antipode power must be -1 or -2");
}

Functional antipode_inv_F(const ParamSet& ps, int j) {
  return Scalar::integer(ps.field, -1) * Functional::convolution({gen_L_inv(ps, j + 1), gen_F(ps, j), gen_L_inv(ps, j)});
}

IdentityResult verify_identity(const Functional& lhs, const Functional& rhs, int D) {
  if (D < 0) throw Error(ErrorCode::InvalidArgument, "cutoff must be nonnegative");
  const int n = lhs.n();
  IdentityResult res;
  for (int s = 0; s <= D; ++s) {
    const SparseMatrix diff = lhs.matrix(s) - rhs.matrix(s);
    if (diff.is_zero()) continue;
    for (std::size_t row = 0; row < diff.rows(); ++row) {
      for (const auto& [col, v] : diff.row(row)) {
        TWord w = word_at(row, col, n, s);
        if (!res.witness || w < *res.witness) res.witness = std::move(w);
      }
    }
    res.holds = false;
    res.lhs_value = lhs(*res.witness).str();
    res.rhs_value = rhs(*res.witness).str();
    return res;
  }
  return res;
}

AnnihilationResult annihilates_relators(const Functional& u, const std::vector<TLinComb>& relators, int D) {
  const int n = u.n();
  AnnihilationResult res;
  for (int s = 2; s <= D; ++s) {
    const SparseMatrix& M = u.matrix(s);
    if (M.is_zero()) continue;
    for (int p = 0; p + 2 <= s; ++p) {
      const int suffix = s - 2 - p;
      const auto xs = all_words(n, p);
      const auto ys = all_words(n, suffix);
      for (std::size_t ri = 0; ri < relators.size(); ++ri) {
        for (const auto& x : xs)
          for (const auto& y : ys) {
            Scalar total = Scalar::zero(u.field());
            for (const auto& [w, c] : relators[ri]) {
              TWord full = x;
              full.insert(full.end(), w.begin(), w.end());
              full.insert(full.end(), y.begin(), y.end());
              std::size_t row, col;
              word_position(full, n, &row, &col);
              total += c * M.at(row, col);
            }
            if (!total.is_zero()) {
              res.holds = false;
              res.witness_prefix = x;
              res.witness_suffix = y;
              res.relator_index = ri;
              return res;
            }
          }
      }
    }
  }
  return res;
}

AnnihilationResult annihilates_relators(const Functional& u, const ParamSet& ps, int D, RttConvention conv) {
  return annihilates_relators(u, rtt_relators(ps, conv), D);
}

std::vector<std::pair<std::string, Functional>> all_generators(const ParamSet& ps) {
  std::vector<std::pair<std::string, Functional>> out;
  for (int i = 1; i <= ps.n; ++i) out.emplace_back("K" + std::to_string(i), gen_K(ps, i));
  for (int i = 1; i <= ps.n; ++i) out.emplace_back("L" + std::to_string(i), gen_L(ps, i));
  for (int i = 1; i < ps.n; ++i) out.emplace_back("E" + std::to_string(i), gen_E(ps, i));
  for (int i = 1; i < ps.n; ++i) out.emplace_back("F" + std::to_string(i), gen_F(ps, i));
  return out;
}

RttConvention select_convention(const std::vector<ParamSet>& samples, int D) {
  std::vector<RttConvention> passing;
  for (RttConvention conv : {RttConvention::Direct, RttConvention::Transposed}) {
    bool ok = true;
    for (const auto& ps : samples) {
      const auto rel = rtt_relators(ps, conv);
      for (const auto& [name, u] : all_generators(ps)) {
        if (!annihilates_relators(u, rel, D).holds) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) passing.push_back(conv);
  }
  if (passing.size() != 1) {
    throw Error(ErrorCode::ConventionAmbiguous,
                passing.empty() ? "no relator convention is annihilated by all generators"
                                : "both relator conventions are annihilated by all generators");
  }
  return passing[0];
}

std::optional<int> nilpotency_probe(const ParamSet& ps, int i, int D, int kmax) {
  if (D < 1 || kmax < 1) throw Error(ErrorCode::InvalidArgument, "probe bounds must be positive");
  const Functional E = gen_E(ps, i);
  Functional power = E;
  for (int k = 1; k <= std::min(kmax, D); ++k) {
    if (k > 1) power = power * E;
    bool vanishes = true;
    for (int s = 0; s <= D && vanishes; ++s) vanishes = power.matrix(s).is_zero();
    if (vanishes) return k;
  }
  return std::nullopt;
}

std::vector<RelationCheck> hopf_relations(const ParamSet& ps, int D, RelationForm form) {
  const KappaTable k = kappa(ps);
  auto kap = [&](int j, int i) { return k[i - 1][j - 1]; };  // kappa_j^i
  const bool stated = form == RelationForm::Stated;
  const Scalar one = Scalar::one(ps.field);
  std::vector<RelationCheck> out;
  for (int i = 1; i <= ps.n; ++i)
    for (int j = 1; j < ps.n; ++j) {
      const Functional K = gen_K(ps, i), E = gen_E(ps, j);
      out.push_back({"K E", i, j, verify_identity(kap(j + 1, i) * (K * E), kap(j, i) * (E * K), D)});
    }
  for (int i = 1; i < ps.n; ++i)
    for (int j = 1; j <= ps.n; ++j) {
      const Functional e = normalized_e(ps, i), L = gen_L(ps, j);
      const Scalar c = stated ? kap(i, j) / kap(i + 1, j) : kap(j, i) / kap(j, i + 1);
      out.push_back({"e L", i, j, verify_identity(e * L, c * (L * e), D)});
    }
  for (int i = 1; i < ps.n; ++i)
    for (int j = 1; j < ps.n; ++j) {
      const Functional E = gen_E(ps, i), F = gen_F(ps, j);
      const Functional lhs = kap(j, i + 1) * (E * F) - kap(j + 1, i) * (F * E);
      Functional rhs = Functional::zero(ps.n, ps.field);
      if (i == j) {
        const Scalar c = ps.r / (ps.r - one);
        rhs = (stated ? c : -c) * (gen_L(ps, i) * gen_K(ps, i + 1) - gen_L(ps, i + 1) * gen_K(ps, i));
      }
      out.push_back({"E F", i, j, verify_identity(lhs, rhs, D)});
    }
  for (int i = 1; i < ps.n; ++i)
    out.push_back({"S^-2 e", i, i, verify_identity(antipode_pm2_e(ps, i, -2), ps.r.inverse() * normalized_e(ps, i), D)});
  return out;
}

}  // namespace qgf
