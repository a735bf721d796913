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

#include "qgf/frt.hpp"

#include <algorithm>

namespace qgf {

void add_term(TLinComb& a, const TWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = a.find(w);
  if (it == a.end()) {
    a.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) a.erase(it);
}

void add_term(TensorSum& a, const std::pair<TWord, TWord>& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = a.find(w);
  if (it == a.end()) {
    a.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) a.erase(it);
}

bool lin_equal(const TLinComb& a, const TLinComb& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ib->second) return false;
  }
  return true;
}

TensorSum coproduct(const TWord& w, int n, const FieldPtr& field) {
  TensorSum out;
  const int s = static_cast<int>(w.size());
  const std::size_t count = ipow(n, s);
  TWord left(s), right(s);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (int t = s - 1; t >= 0; --t) {
      const int k = static_cast<int>(rest % n) + 1;
      rest /= n;
      left[t] = Letter{w[t].row, k};
      right[t] = Letter{k, w[t].col};
    }
    add_term(out, {left, right}, Scalar::one(field));
  }
  return out;
}

TensorSum coproduct(const TLinComb& a, int n, const FieldPtr& field) {
  TensorSum out;
  for (const auto& [w, c] : a) {
    for (const auto& [lr, d] : coproduct(w, n, field)) add_term(out, lr, c * d);
  }
  return out;
}

const char* convention_name(RttConvention c) { return c == RttConvention::Direct ? "direct" : "transposed"; }

std::vector<TLinComb> rtt_relators(const ParamSet& ps, RttConvention conv) {
  const int n = ps.n;
  const RMatrix R = build_R(ps);
  // coefficient of T_a^k T_b^l on the left, T_i^a T_j^b on the right
  auto left_coef = [&](int i, int j, int a, int b) {
    return conv == RttConvention::Transposed ? R.entry(i, j, a, b) : R.entry(a, b, i, j);
  };
  auto right_coef = [&](int a, int b, int k, int l) {
    return conv == RttConvention::Transposed ? R.entry(a, b, k, l) : R.entry(k, l, a, b);
  };
  std::vector<TLinComb> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          TLinComb rel;
          for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
              add_term(rel, {{a, k}, {b, l}}, left_coef(i, j, a, b));
              add_term(rel, {{i, a}, {j, b}}, -right_coef(a, b, k, l));
            }
          if (rel.empty()) continue;
          const Scalar lead = rel.begin()->second.inverse();
          for (auto& [w, c] : rel) c *= lead;
          const bool seen = std::any_of(out.begin(), out.end(), [&](const TLinComb& o) { return lin_equal(o, rel); });
          if (!seen) out.push_back(std::move(rel));
        }
  return out;
}

bool relators_form_coideal(const ParamSet& ps, const std::vector<TLinComb>& relators) {
  const int n = ps.n;
  const std::size_t dim = ipow(n, 4);
  auto index_of = [&](const TWord& w) {
    std::size_t r, c;
    word_position(w, n, &r, &c);
    return r * static_cast<std::size_t>(n * n) + c;
  };
  std::vector<std::vector<Scalar>> rows;
  for (const auto& rel : relators) {
    std::vector<Scalar> v(dim, Scalar::zero(ps.field));
    for (const auto& [w, c] : rel) v[index_of(w)] = c;
    rows.push_back(std::move(v));
  }
  const std::vector<std::size_t> pivots = rref(rows);
  std::vector<long> pivot_row(dim, -1);
  for (std::size_t k = 0; k < pivots.size(); ++k) pivot_row[pivots[k]] = static_cast<long>(k);
  // Quotient coordinates live on the non-pivot columns.
  std::vector<long> free_index(dim, -1);
  std::size_t free_count = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    if (pivot_row[c] < 0) free_index[c] = static_cast<long>(free_count++);
  }
  // Image of a basis word in the quotient.
  auto project = [&](const TWord& w) {
    std::vector<std::pair<std::size_t, Scalar>> out;
    const std::size_t c = index_of(w);
    if (pivot_row[c] < 0) {
      out.emplace_back(free_index[c], Scalar::one(ps.field));
      return out;
    }
    const auto& row = rows[pivot_row[c]];
    for (std::size_t j = 0; j < dim; ++j) {
      if (free_index[j] >= 0 && !row[j].is_zero()) out.emplace_back(free_index[j], -row[j]);
    }
    return out;
  };
  for (const auto& rel : relators) {
    std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
    for (const auto& [lr, c] : coproduct(rel, n, ps.field)) {
      for (const auto& [a, x] : project(lr.first))
        for (const auto& [b, y] : project(lr.second)) {
          auto [it, inserted] = acc.emplace(std::make_pair(a, b), c * x * y);
          if (!inserted) it->second += c * x * y;
        }
    }
    for (const auto& [ab, v] : acc) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

namespace {

void pairing_dfs(const RMatrix& R, int t, int pos, std::size_t row, std::size_t col, const std::vector<Scalar>& v,
                 int target, SparseMatrix& out) {
  const int n = R.n;
  if (pos == t) {
    out.add_to(row, col, v[target]);
    return;
  }
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      // v'_b = sum_a v_a R_{a j}^{k b}
      std::vector<Scalar> next(n, Scalar::zero(R.m.field()));
      bool any = false;
      for (int a = 1; a <= n; ++a) {
        if (v[a - 1].is_zero()) continue;
        for (int b = 1; b <= n; ++b) {
          const Scalar& e = R.entry(a, j, k, b);
          if (e.is_zero()) continue;
          next[b - 1] += v[a - 1] * e;
          any = true;
        }
      }
      if (!any) continue;
      pairing_dfs(R, t, pos + 1, row * n + (j - 1), col * n + (k - 1), next, target, out);
    }
}

}  // namespace

SparseMatrix letter_pairing_matrix(const RMatrix& R, Letter a, int t) {
  const int n = R.n;
  const std::size_t size = ipow(n, t);
  SparseMatrix out(R.m.field(), size, size);
  std::vector<Scalar> start(n, Scalar::zero(R.m.field()));
  start[a.row - 1] = Scalar::one(R.m.field());
  pairing_dfs(R, t, 0, 0, 0, start, a.col - 1, out);
  return out;
}

Scalar braid_pairing(const RMatrix& R, const TWord& a, const TWord& b) {
  const int n = R.n;
  const int t = static_cast<int>(b.size());
  const std::size_t size = ipow(n, t);
  SparseMatrix acc = SparseMatrix::identity(R.m.field(), size);
  // <x_1...x_s | -> = <x_s|-> * ... * <x_1|->
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * letter_pairing_matrix(R, *it, t);
  std::size_t row, col;
  word_position(b, n, &row, &col);
  return acc.at(row, col);
}

Scalar braid_pairing(const ParamSet& ps, const TWord& a, const TWord& b) { return braid_pairing(build_R(ps), a, b); }

}  // namespace qgf
