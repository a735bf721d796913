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

#ifndef QGF_WORD_HPP
#define QGF_WORD_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace qgf {

/// The generator T_row^col, 1-based.
struct Letter {
  int row;
  int col;
  auto operator<=>(const Letter&) const = default;
};

using TWord = std::vector<Letter>;

/// Row-major pair index: (a, b) -> a*n + b, 0-based. Every tensor index in
/// the library goes through this function.
inline std::size_t pair_index(int a, int b, int n) {
  return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
}

inline std::size_t ipow(std::size_t base, int e) {
  std::size_t out = 1;
  while (e-- > 0) out *= base;
  return out;
}

/// Position of a word inside the n^s x n^s matrix of a functional.
/// Row digits come from the lower (row) indices, column digits from the upper.
inline void word_position(const TWord& w, int n, std::size_t* row, std::size_t* col) {
  std::size_t r = 0, c = 0;
  for (const auto& l : w) {
    r = r * n + static_cast<std::size_t>(l.row - 1);
    c = c * n + static_cast<std::size_t>(l.col - 1);
  }
  *row = r;
  *col = c;
}

inline TWord word_at(std::size_t row, std::size_t col, int n, int s) {
  TWord w(s);
  for (int t = s - 1; t >= 0; --t) {
    w[t] = Letter{static_cast<int>(row % n) + 1, static_cast<int>(col % n) + 1};
    row /= n;
    col /= n;
  }
  return w;
}

/// All words of length s in lexicographic order.
std::vector<TWord> all_words(int n, int s);

std::string word_str(const TWord& w);

}  // namespace qgf

#endif
