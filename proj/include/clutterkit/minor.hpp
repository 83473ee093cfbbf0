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

// Labeled minor containment. N is a minor of M when E(N) ⊆ E(M) and some
// split of E(M) - E(N) into deleted and contracted elements turns M into N
// exactly (same labels, same rows).

#ifndef CLUTTERKIT_MINOR_HPP
#define CLUTTERKIT_MINOR_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "clutterkit/clutter.hpp"

namespace clutterkit {

namespace detail {

/// Rows of @p n expressed as masks over the ground positions of @p m, or
/// nullopt when E(n) is not a subset of E(m).
inline std::optional<std::vector<Mask>> embed_rows(const Clutter& m,
                                                   const Clutter& n) {
  std::vector<std::size_t> pos;
  pos.reserve(n.size());
  for (const auto& e : n.ground()) {
    auto idx = m.index_of(e);
    if (!idx) return std::nullopt;
    pos.push_back(*idx);
  }
  std::vector<Mask> rows;
  rows.reserve(n.row_count());
  for (Mask r : n.row_masks()) {
    Mask out = 0;
    for (std::size_t i : positions(r)) out |= bit(pos[i]);
    rows.push_back(out);
  }
  canonicalize(rows);
  return rows;
}

/// Row masks of M after deleting @p del and contracting @p con, still over
/// the positions of @p m (no re-packing), canonically ordered.
inline std::vector<Mask> minor_rows_unpacked(const Clutter& m, Mask del,
                                             Mask con) {
  std::vector<Mask> rows;
  rows.reserve(m.row_count());
  for (Mask r : m.row_masks()) {
    if ((r & del) == 0) rows.push_back(r & ~con);
  }
  // Contracting a set at once equals contracting its elements one by one:
  // both leave the minimal members of {A - C}.
  return minimal_sets(std::move(rows));
}

}  // namespace detail

/// The witness with the lexicographically least sorted delete-set, or
/// nullopt when @p n is not a minor of @p m.
inline std::optional<MinorSpec> has_minor(const Clutter& m, const Clutter& n) {
  const auto target = detail::embed_rows(m, n);
  if (!target) return std::nullopt;
  const Mask rest = m.full_mask() & ~m.mask_of(n.ground());
  const std::vector<std::size_t> free = detail::positions(rest);

  // Delete-sets of `rest` in lexicographic order of their sorted members:
  // a set is visited before its extensions, extensions ascend.
  std::optional<Mask> hit;
  auto search = [&](auto&& self, Mask del, std::size_t from) -> void {
    if (detail::minor_rows_unpacked(m, del, rest & ~del) == *target) {
      hit = del;
      return;
    }
    for (std::size_t k = from; k < free.size() && !hit; ++k) {
      self(self, del | detail::bit(free[k]), k + 1);
    }
  };
  search(search, 0, 0);
  if (!hit) return std::nullopt;
  return MinorSpec{m.members(*hit), m.members(rest & ~*hit)};
}

inline bool is_minor(const Clutter& m, const Clutter& n) {
  return has_minor(m, n).has_value();
}

inline bool is_proper_minor(const Clutter& m, const Clutter& n) {
  return n.size() < m.size() && is_minor(m, n);
}

/// Calls @p visit(spec, minor) for each of the 3^|E| keep/delete/contract
/// assignments. Assignments are counted in base 3 with the least element as
/// the most significant digit and keep < delete < contract, so the identity
/// comes first.
inline void for_each_minor(
    const Clutter& m,
    const std::function<void(const MinorSpec&, const Clutter&)>& visit) {
  const std::size_t n = m.size();
  auto rec = [&](auto&& self, std::size_t i, Mask del, Mask con) -> void {
    if (i == n) {
      visit(MinorSpec{m.members(del), m.members(con)},
            detail::apply_minor_masks(m, del, con));
      return;
    }
    self(self, i + 1, del, con);
    self(self, i + 1, del | detail::bit(i), con);
    self(self, i + 1, del, con | detail::bit(i));
  };
  rec(rec, 0, 0, 0);
}

inline std::vector<std::pair<MinorSpec, Clutter>> all_minors(const Clutter& m) {
  std::vector<std::pair<MinorSpec, Clutter>> out;
  for_each_minor(m, [&](const MinorSpec& spec, const Clutter& minor) {
    out.emplace_back(spec, minor);
  });
  return out;
}

}  // namespace clutterkit

#endif  // CLUTTERKIT_MINOR_HPP
