// Copyright 2026 The cardcut Authors.
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

// Exact dense linear algebra used for affine ranks and small square solves.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cardcut/rational.hpp"

namespace cardcut::linalg {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by fraction-free (Bareiss) elimination. Entries stay integral and
/// every intermediate is a minor of the input, so growth is polynomial.
inline int rank(IntegerMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[i][k] = (a[r][c] * a[i][k] - a[i][c] * a[r][k]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

/// Rows scaled by their common denominators, then integer rank.
inline int rank(const RationalMatrix& a) {
  IntegerMatrix ints;
  ints.reserve(a.size());
  for (const auto& row : a) {
    const Integer d = common_denominator(row);
    std::vector<Integer> out;
    out.reserve(row.size());
    for (const Rational& v : row) out.push_back(Integer(v.get_num() * (d / v.get_den())));
    ints.push_back(std::move(out));
  }
  return rank(std::move(ints));
}

/// Affine rank of a point set: rank of the differences to the first point,
/// i.e. the dimension of the affine hull. -1 for an empty set.
template <typename Vec>
int affine_rank(const std::vector<Vec>& points) {
  if (points.empty()) return -1;
  IntegerMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t k = 1; k < points.size(); ++k) {
    std::vector<Integer> row;
    row.reserve(points[k].size());
    for (std::size_t c = 0; c < points[k].size(); ++c) row.emplace_back(points[k][c] - points[0][c]);
    diffs.push_back(std::move(row));
  }
  return rank(std::move(diffs));
}

/// Solves a * x = b by Gauss-Jordan elimination; nullopt when singular.
inline std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    const Rational inv = 1 / a[c][c];
    for (std::size_t k = c; k < n; ++k) a[c][k] *= inv;
    b[c] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
      b[i] -= f * b[c];
    }
  }
  return b;
}

}  // namespace cardcut::linalg
