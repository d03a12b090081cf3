// include/cstk/metrics/edit-distance.h

// Copyright 2026  The cstk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CSTK_METRICS_EDIT_DISTANCE_H_
#define CSTK_METRICS_EDIT_DISTANCE_H_

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

namespace cstk {

struct AlignmentCounts {
  std::size_t substitutions = 0;
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::size_t hits = 0;

  std::size_t distance() const { return substitutions + insertions + deletions; }
  std::size_t ref_length() const { return hits + substitutions + deletions; }

  AlignmentCounts &operator+=(const AlignmentCounts &o) {
    substitutions += o.substitutions;
    insertions += o.insertions;
    deletions += o.deletions;
    hits += o.hits;
    return *this;
  }
  friend bool operator==(const AlignmentCounts &, const AlignmentCounts &) = default;
};

/// Unit-cost Levenshtein alignment. Among alignments of minimal cost the one
/// with the fewest substitutions is chosen, then the fewest insertions.
template <typename Token>
AlignmentCounts EditDistance(const std::vector<Token> &ref, const std::vector<Token> &hyp) {
  // Cost key per cell: (distance, substitutions, insertions); deletions and
  // hits follow from the reference length.
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  const std::size_t n = ref.size(), m = hyp.size();
  std::vector<Key> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = {j, 0, j};
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = {i, 0, 0};
    for (std::size_t j = 1; j <= m; ++j) {
      const auto [dd, ds, di] = prev[j];
      Key best{dd + 1, ds, di};  // deletion
      const auto [id, is, ii] = cur[j - 1];
      best = std::min(best, Key{id + 1, is, ii + 1});  // insertion
      const auto [md, ms, mi] = prev[j - 1];
      const bool same = ref[i - 1] == hyp[j - 1];
      best = std::min(best, Key{md + (same ? 0 : 1), ms + (same ? 0 : 1), mi});
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  const auto [d, s, ins] = prev[m];
  AlignmentCounts c;
  c.substitutions = s;
  c.insertions = ins;
  c.deletions = d - s - ins;
  c.hits = n - s - c.deletions;
  return c;
}

}  // namespace cstk

#endif  // CSTK_METRICS_EDIT_DISTANCE_H_
