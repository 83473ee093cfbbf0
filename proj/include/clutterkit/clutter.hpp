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

/** @file clutter.hpp
 *  @brief Clutters, deletion, contraction, minors and separations.
 *
 *  A clutter is a finite ground set together with an antichain of subsets of
 *  it (the rows). Elements are text labels ordered lexicographically; inside a
 *  Clutter they are stored sorted, and rows are bit masks over the positions
 *  of that sorted ground vector. Rows are kept in canonical order (cardinality
 *  first, then lexicographic member sequence), so two clutters are equal
 *  exactly when their ground vectors and row vectors compare equal.
 */

#ifndef CLUTTERKIT_CLUTTER_HPP
#define CLUTTERKIT_CLUTTER_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clutterkit/error.hpp"

namespace clutterkit {

using Element = std::string;
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGroundSize = 64;

namespace detail {

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

constexpr Mask low_bits(std::size_t n) {
  return n >= 64 ? ~Mask{0} : bit(n) - 1;
}

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Drops bit @p i and shifts the higher bits down by one.
constexpr Mask remove_bit(Mask m, std::size_t i) {
  const Mask low = m & low_bits(i);
  const Mask high = i + 1 >= 64 ? 0 : (m >> (i + 1)) << i;
  return low | high;
}

/// Canonical row order: cardinality, then lexicographic member sequence.
/// For equal cardinality the sequence of @p a is smaller iff the lowest
/// differing bit belongs to @p a.
constexpr bool canonical_less(Mask a, Mask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const Mask d = a ^ b;
  return (a & d & (~d + 1)) != 0;
}

inline void canonicalize(std::vector<Mask>& rows) {
  std::sort(rows.begin(), rows.end(), canonical_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

/// Keeps the inclusion-minimal members of @p rows, canonically ordered.
inline std::vector<Mask> minimal_sets(std::vector<Mask> rows) {
  canonicalize(rows);
  std::vector<Mask> kept;
  kept.reserve(rows.size());
  for (Mask r : rows) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [r](Mask k) {
      return is_subset(k, r);
    });
    if (!dominated) kept.push_back(r);
  }
  return kept;
}

/// Positions of the set bits, ascending.
inline std::vector<std::size_t> positions(Mask m) {
  std::vector<std::size_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline bool valid_label(std::string_view label) {
  if (label.empty() || label == "-") return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  });
}

struct TrustedTag {};

}  // namespace detail

class Clutter {
 public:
  /// The empty clutter: no elements, no rows.
  Clutter() = default;

  /// Internal constructor: @p ground must be sorted and distinct, @p rows an
  /// antichain over it. Rows are put into canonical order here.
  Clutter(detail::TrustedTag, std::vector<Element> ground,
          std::vector<Mask> rows)
      : ground_(std::move(ground)), rows_(std::move(rows)) {
    detail::canonicalize(rows_);
  }

  const std::vector<Element>& ground() const noexcept { return ground_; }
  std::span<const Mask> row_masks() const noexcept { return rows_; }
  std::size_t size() const noexcept { return ground_.size(); }
  std::size_t row_count() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return ground_.empty(); }
  Mask full_mask() const noexcept { return detail::low_bits(ground_.size()); }

  bool has_empty_row() const noexcept {
    return !rows_.empty() && rows_.front() == 0;
  }

  std::optional<std::size_t> index_of(std::string_view label) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), label);
    if (it == ground_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - ground_.begin());
  }

  bool contains(std::string_view label) const {
    return index_of(label).has_value();
  }

  std::size_t require_index(std::string_view label) const {
    auto idx = index_of(label);
    if (!idx) {
      throw ClutterError(ErrorKind::kElementNotFound,
                         "element '" + std::string(label) +
                             "' is not in the ground set");
    }
    return *idx;
  }

  /// Mask of a set of labels; throws ForeignElement for unknown labels.
  template <typename Range>
  Mask mask_of(const Range& labels) const {
    Mask m = 0;
    for (const auto& label : labels) {
      auto idx = index_of(label);
      if (!idx) {
        throw ClutterError(ErrorKind::kForeignElement,
                           "element '" + std::string(label) +
                               "' is not in the ground set");
      }
      m |= detail::bit(*idx);
    }
    return m;
  }

  std::vector<Element> members(Mask m) const {
    std::vector<Element> out;
    for (std::size_t i : detail::positions(m)) out.push_back(ground_[i]);
    return out;
  }

  std::vector<std::vector<Element>> rows() const {
    std::vector<std::vector<Element>> out;
    out.reserve(rows_.size());
    for (Mask r : rows_) out.push_back(members(r));
    return out;
  }

  friend bool operator==(const Clutter&, const Clutter&) = default;

  /// Arbitrary but total order, used for deduplication.
  friend std::strong_ordering operator<=>(const Clutter& a,
                                          const Clutter& b) {
    if (auto c = a.ground_ <=> b.ground_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<Element> ground_;
  std::vector<Mask> rows_;
};

/// Validated construction from labels. Duplicate members inside a row and
/// duplicate rows collapse (rows form a set); duplicate ground labels do not.
inline Clutter new_clutter(std::vector<Element> ground,
                           const std::vector<std::vector<Element>>& rows) {
  for (const auto& label : ground) {
    if (!detail::valid_label(label)) {
      throw ClutterError(ErrorKind::kInvalidLabel,
                         "label '" + label + "' is empty, '-' or has whitespace");
    }
  }
  std::sort(ground.begin(), ground.end());
  if (auto dup = std::adjacent_find(ground.begin(), ground.end());
      dup != ground.end()) {
    throw ClutterError(ErrorKind::kDuplicateLabel,
                       "label '" + *dup + "' appears twice in the ground set");
  }
  if (ground.size() > kMaxGroundSize) {
    throw ClutterError(ErrorKind::kTooLarge,
                       "ground set exceeds " + std::to_string(kMaxGroundSize) +
                           " elements");
  }
  Clutter shell(detail::TrustedTag{}, ground, {});
  std::vector<Mask> masks;
  masks.reserve(rows.size());
  for (const auto& row : rows) masks.push_back(shell.mask_of(row));
  detail::canonicalize(masks);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      // canonical order puts any subset before its supersets
      if (detail::is_subset(masks[i], masks[j])) {
        auto fmt = [&](Mask m) {
          std::string s = "{";
          for (const auto& e : shell.members(m)) s += (s.size() > 1 ? "," : "") + e;
          return s + "}";
        };
        throw ClutterError(ErrorKind::kAntichainViolation,
                           "row " + fmt(masks[i]) + " is contained in row " +
                               fmt(masks[j]));
      }
    }
  }
  return Clutter(detail::TrustedTag{}, std::move(ground), std::move(masks));
}

/// M\v: drop v and every row containing it.
inline Clutter delete_element(const Clutter& m, std::string_view v) {
  const std::size_t i = m.require_index(v);
  std::vector<Element> ground = m.ground();
  ground.erase(ground.begin() + static_cast<std::ptrdiff_t>(i));
  std::vector<Mask> rows;
  for (Mask r : m.row_masks()) {
    if ((r & detail::bit(i)) == 0) rows.push_back(detail::remove_bit(r, i));
  }
  return Clutter(detail::TrustedTag{}, std::move(ground), std::move(rows));
}

/// M/v: drop v from every row and keep the inclusion-minimal results.
inline Clutter contract(const Clutter& m, std::string_view v) {
  const std::size_t i = m.require_index(v);
  std::vector<Element> ground = m.ground();
  ground.erase(ground.begin() + static_cast<std::ptrdiff_t>(i));
  std::vector<Mask> rows;
  rows.reserve(m.row_count());
  for (Mask r : m.row_masks()) rows.push_back(detail::remove_bit(r, i));
  return Clutter(detail::TrustedTag{}, std::move(ground),
                 detail::minimal_sets(std::move(rows)));
}

struct MinorSpec {
  std::vector<Element> deletes;
  std::vector<Element> contracts;

  bool is_identity() const { return deletes.empty() && contracts.empty(); }
  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

namespace detail {

/// Applies deletions then contractions, each ascending by position, on masks
/// over the positions of @p m. Positions in @p del and @p con are removed from
/// the ground set of the result.
inline Clutter apply_minor_masks(const Clutter& m, Mask del, Mask con) {
  std::vector<Mask> rows(m.row_masks().begin(), m.row_masks().end());
  for (std::size_t i : positions(del)) {
    std::erase_if(rows, [i](Mask r) { return (r & bit(i)) != 0; });
  }
  for (std::size_t i : positions(con)) {
    bool touched = false;
    for (Mask& r : rows) {
      if (r & bit(i)) {
        r &= ~bit(i);
        touched = true;
      }
    }
    if (touched) rows = minimal_sets(std::move(rows));
  }
  const Mask keep = m.full_mask() & ~(del | con);
  std::vector<std::size_t> kept_positions = positions(keep);
  std::vector<Element> ground;
  ground.reserve(kept_positions.size());
  for (std::size_t i : kept_positions) ground.push_back(m.ground()[i]);
  for (Mask& r : rows) {
    Mask packed = 0;
    for (std::size_t k = 0; k < kept_positions.size(); ++k) {
      if (r & bit(kept_positions[k])) packed |= bit(k);
    }
    r = packed;
  }
  return Clutter(TrustedTag{}, std::move(ground), std::move(rows));
}

}  // namespace detail

/// Result of deleting and contracting the elements named in @p spec. The
/// operations are applied in a fixed order (deletions, then contractions,
/// each ascending by label); the result does not depend on the order.
inline Clutter apply_minor(const Clutter& m, const MinorSpec& spec) {
  Mask del = 0;
  Mask con = 0;
  try {
    del = m.mask_of(spec.deletes);
    con = m.mask_of(spec.contracts);
  } catch (const ClutterError& e) {
    throw ClutterError(ErrorKind::kInvalidSpec, e.what());
  }
  if (del & con) {
    throw ClutterError(ErrorKind::kInvalidSpec,
                       "an element is both deleted and contracted");
  }
  return detail::apply_minor_masks(m, del, con);
}

struct Separation {
  std::vector<Element> left;
  std::vector<Element> right;
  friend bool operator==(const Separation&, const Separation&) = default;
};

namespace detail {

/// Components of the ground set under "shares a row". Returns one mask per
/// component, ordered by least position.
inline std::vector<Mask> element_components(const Clutter& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Mask r : m.row_masks()) {
    if (r == 0) continue;
    const std::size_t first = static_cast<std::size_t>(std::countr_zero(r));
    for (std::size_t i : positions(r & (r - 1))) {
      parent[find(i)] = find(first);
    }
  }
  std::vector<Mask> by_root(n, 0);
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)] |= bit(i);
  std::vector<Mask> out;
  for (Mask c : by_root) {
    if (c != 0) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  return out;
}

}  // namespace detail

/// A separation whose left part is the lexicographically least valid left
/// part containing the least element, or nullopt when @p m is connected.
///
/// Valid left parts are exactly the proper unions of element components that
/// include the component of the least element. They are searched in
/// lexicographic order of their sorted member sequences, pruning prefixes that
/// skipped an element of a component they already touch.
inline std::optional<Separation> find_separation(const Clutter& m) {
  const std::size_t n = m.size();
  if (n <= 1) return std::nullopt;
  const std::vector<Mask> comps = detail::element_components(m);
  if (comps.size() == 1) return std::nullopt;

  std::vector<Mask> comp_of(n);
  for (Mask c : comps) {
    for (std::size_t i : detail::positions(c)) comp_of[i] = c;
  }
  const Mask full = m.full_mask();

  // Depth-first in lexicographic order: a prefix is visited before its
  // extensions, extensions ascend by their next element.
  std::optional<Mask> found;
  auto search = [&](auto&& self, Mask prefix, Mask touched,
                    std::size_t last) -> void {
    if (detail::is_subset(touched, prefix) && prefix != full) {
      found = prefix;
      return;
    }
    for (std::size_t x = last + 1; x < n && !found; ++x) {
      const Mask next = prefix | detail::bit(x);
      const Mask next_touched = touched | comp_of[x];
      // every touched element below x must already be chosen
      if (!detail::is_subset(next_touched & detail::low_bits(x + 1), next)) {
        continue;
      }
      self(self, next, next_touched, x);
    }
  };
  search(search, detail::bit(0), comp_of[0], 0);
  if (!found) return std::nullopt;
  return Separation{m.members(*found), m.members(full & ~*found)};
}

inline bool is_connected(const Clutter& m) {
  return m.size() <= 1 || detail::element_components(m).size() == 1;
}

/// Canonical text form:
///   elements <labels ascending>
///   row <members ascending>      (one per row, canonical row order)
///   row -                        (the empty row)
inline std::string serialize(const Clutter& m) {
  std::string out = "elements";
  for (const auto& e : m.ground()) out += ' ' + e;
  out += '\n';
  for (Mask r : m.row_masks()) {
    out += "row";
    if (r == 0) {
      out += " -";
    } else {
      for (std::size_t i : detail::positions(r)) out += ' ' + m.ground()[i];
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return tokens;
}

inline ClutterError parse_error(std::size_t line_no, const std::string& msg) {
  return ClutterError(ErrorKind::kParseError,
                      "line " + std::to_string(line_no) + ": " + msg);
}

/// Parses the body of the clutter format starting at @p first_line (1-based
/// line numbers are used in messages). Lines starting with '#' and blank
/// lines are skipped.
inline Clutter parse_clutter_lines(const std::vector<std::string>& lines,
                                   std::size_t first_line) {
  std::optional<std::vector<Element>> ground;
  std::vector<std::vector<Element>> rows;
  for (std::size_t k = first_line; k < lines.size(); ++k) {
    std::string_view line = lines[k];
    const std::size_t line_no = k + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (!ground) {
      if (tokens.front() != "elements") {
        throw parse_error(line_no, "expected 'elements' header");
      }
      ground.emplace(tokens.begin() + 1, tokens.end());
      continue;
    }
    if (tokens.front() != "row") {
      throw parse_error(line_no, "expected 'row', found '" + tokens.front() + "'");
    }
    if (tokens.size() == 1) {
      throw parse_error(line_no, "empty row must be written 'row -'");
    }
    if (tokens.size() == 2 && tokens[1] == "-") {
      rows.emplace_back();
    } else {
      rows.emplace_back(tokens.begin() + 1, tokens.end());
    }
  }
  if (!ground) throw parse_error(lines.size(), "missing 'elements' header");
  return new_clutter(std::move(*ground), rows);
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace detail

/// Inverse of serialize(). Accepts any member and row order; validation
/// failures (antichain, foreign element, duplicate label) propagate with
/// their own kinds, syntax problems raise ParseError.
inline Clutter parse_clutter(std::string_view text) {
  return detail::parse_clutter_lines(detail::split_lines(text), 0);
}

}  // namespace clutterkit

#endif  // CLUTTERKIT_CLUTTER_HPP
