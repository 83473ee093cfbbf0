// Copyright 2026 The clutterkit Authors
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

// Blockers: the clutter of inclusion-minimal transversals.
//
// blocker() dualizes row by row: starting from {∅}, the transversals of the
// first k rows are extended to the (k+1)-th row and re-minimalized.
// blocker_by_enumeration() scans subsets by ascending cardinality and is
// limited to 20 elements. The two must agree everywhere both apply.
//
// Degenerate cases fall out of the definition: a clutter without rows has
// blocker {∅}, and a clutter whose only row is empty has no transversal.

#ifndef CLUTTERKIT_BLOCKER_HPP
#define CLUTTERKIT_BLOCKER_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <string>
#include <vector>

#include "clutterkit/clutter.hpp"
#include "clutterkit/error.hpp"

namespace clutterkit {

inline constexpr std::size_t kMaxEnumerationGround = 20;

inline Clutter blocker(const Clutter& m) {
  std::vector<Mask> transversals{0};
  for (Mask row : m.row_masks()) {
    std::vector<Mask> next;
    for (Mask t : transversals) {
      if (t & row) {
        next.push_back(t);
        continue;
      }
      for (std::size_t i : detail::positions(row)) {
        next.push_back(t | detail::bit(i));
      }
    }
    transversals = detail::minimal_sets(std::move(next));
  }
  return Clutter(detail::TrustedTag{}, m.ground(), std::move(transversals));
}

inline Clutter blocker_by_enumeration(const Clutter& m) {
  if (m.size() > kMaxEnumerationGround) {
    throw ClutterError(ErrorKind::kTooLarge,
                       "subset enumeration is limited to " +
                           std::to_string(kMaxEnumerationGround) + " elements");
  }
  const auto rows = m.row_masks();
  std::vector<Mask> subsets(std::size_t{1} << m.size());
  for (std::size_t s = 0; s < subsets.size(); ++s) subsets[s] = s;
  std::stable_sort(subsets.begin(), subsets.end(), [](Mask a, Mask b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<Mask> kept;
  for (Mask s : subsets) {
    const bool hits_all = std::all_of(rows.begin(), rows.end(),
                                      [s](Mask r) { return (r & s) != 0; });
    if (!hits_all) continue;
    const bool has_kept_subset = std::any_of(
        kept.begin(), kept.end(), [s](Mask k) { return detail::is_subset(k, s); });
    if (!has_kept_subset) kept.push_back(s);
  }
  return Clutter(detail::TrustedTag{}, m.ground(), std::move(kept));
}

/// Whether @p subset meets every row of @p m.
template <typename Range>
bool is_transversal(const Clutter& m, const Range& subset) {
  const Mask s = m.mask_of(subset);
  const auto rows = m.row_masks();
  return std::all_of(rows.begin(), rows.end(),
                     [s](Mask r) { return (r & s) != 0; });
}

}  // namespace clutterkit

#endif  // CLUTTERKIT_BLOCKER_HPP
