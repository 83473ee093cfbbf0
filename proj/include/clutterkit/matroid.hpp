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

// Matroids presented by their circuits. Meant for small fixtures: bases and
// duals are found by scanning all subsets of the ground set.

#ifndef CLUTTERKIT_MATROID_HPP
#define CLUTTERKIT_MATROID_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clutterkit/clutter.hpp"
#include "clutterkit/error.hpp"

namespace clutterkit {

inline constexpr std::size_t kMaxMatroidGround = 20;

class CircuitMatroid {
 public:
  /// Validates the circuit axioms: no empty circuit, circuits form an
  /// antichain, and circuit elimination holds for every pair.
  static CircuitMatroid from_circuits(std::vector<Element> ground,
                                      const std::vector<std::vector<Element>>& circuits) {
    Clutter c = new_clutter(std::move(ground), circuits);
    return CircuitMatroid(std::move(c));
  }

  static CircuitMatroid from_clutter(Clutter circuits) {
    return CircuitMatroid(std::move(circuits));
  }

  const std::vector<Element>& ground() const noexcept { return circuits_.ground(); }
  const Clutter& circuits() const noexcept { return circuits_; }

  bool is_independent(Mask s) const {
    const auto rows = circuits_.row_masks();
    return std::none_of(rows.begin(), rows.end(),
                        [s](Mask c) { return detail::is_subset(c, s); });
  }

  friend bool operator==(const CircuitMatroid&, const CircuitMatroid&) = default;

 private:
  explicit CircuitMatroid(Clutter circuits) : circuits_(std::move(circuits)) {
    if (circuits_.size() > kMaxMatroidGround) {
      throw ClutterError(ErrorKind::kTooLarge,
                         "matroid fixtures are limited to " +
                             std::to_string(kMaxMatroidGround) + " elements");
    }
    if (circuits_.has_empty_row()) {
      throw ClutterError(ErrorKind::kNotAMatroid, "the empty set is a circuit");
    }
    const auto cs = circuits_.row_masks();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        const Mask uni = cs[i] | cs[j];
        for (std::size_t e : detail::positions(cs[i] & cs[j])) {
          const Mask rest = uni & ~detail::bit(e);
          const bool eliminated = std::any_of(cs.begin(), cs.end(), [rest](Mask c) {
            return detail::is_subset(c, rest);
          });
          if (!eliminated) {
            throw ClutterError(ErrorKind::kNotAMatroid,
                               "circuit elimination fails on element '" +
                                   circuits_.ground()[e] + "'");
          }
        }
      }
    }
  }

  Clutter circuits_;
};

inline Clutter circuits_clutter(const CircuitMatroid& n) { return n.circuits(); }

namespace detail {

inline std::vector<Mask> all_subsets(std::size_t n) {
  std::vector<Mask> out(std::size_t{1} << n);
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = s;
  return out;
}

inline std::vector<Mask> basis_masks(const CircuitMatroid& n) {
  std::vector<Mask> independent;
  for (Mask s : all_subsets(n.ground().size())) {
    if (n.is_independent(s)) independent.push_back(s);
  }
  std::vector<Mask> bases;
  for (Mask s : independent) {
    const bool maximal = std::none_of(
        independent.begin(), independent.end(),
        [s](Mask t) { return t != s && is_subset(s, t); });
    if (maximal) bases.push_back(s);
  }
  canonicalize(bases);
  return bases;
}

}  // namespace detail

/// Maximal circuit-free subsets, canonically ordered.
inline std::vector<std::vector<Element>> bases(const CircuitMatroid& n) {
  std::vector<std::vector<Element>> out;
  for (Mask b : detail::basis_masks(n)) out.push_back(n.circuits().members(b));
  return out;
}

/// The dual matroid: its bases are the complements of the bases of @p n, and
/// its circuits are the minimal nonempty sets contained in no dual basis.
inline CircuitMatroid dual(const CircuitMatroid& n) {
  const Mask full = n.circuits().full_mask();
  std::vector<Mask> dual_bases;
  for (Mask b : detail::basis_masks(n)) dual_bases.push_back(full & ~b);
  std::vector<Mask> dependent;
  for (Mask s : detail::all_subsets(n.ground().size())) {
    if (s == 0) continue;
    const bool in_some_basis = std::any_of(
        dual_bases.begin(), dual_bases.end(),
        [s](Mask b) { return detail::is_subset(s, b); });
    if (!in_some_basis) dependent.push_back(s);
  }
  return CircuitMatroid::from_clutter(Clutter(
      detail::TrustedTag{}, n.ground(), detail::minimal_sets(std::move(dependent))));
}

inline CircuitMatroid direct_sum(const CircuitMatroid& a, const CircuitMatroid& b) {
  for (const auto& e : a.ground()) {
    if (b.circuits().contains(e)) {
      throw ClutterError(ErrorKind::kGroundOverlap,
                         "element '" + e + "' is in both ground sets");
    }
  }
  std::vector<Element> ground = a.ground();
  ground.insert(ground.end(), b.ground().begin(), b.ground().end());
  auto circuits = a.circuits().rows();
  for (auto& c : b.circuits().rows()) circuits.push_back(std::move(c));
  return CircuitMatroid::from_circuits(std::move(ground), circuits);
}

/// U(rank, size) on labels "1".."size": every (rank+1)-subset is a circuit.
inline CircuitMatroid uniform(int rank, int size) {
  if (size < 0 || rank < 0 || rank > size) {
    throw ClutterError(ErrorKind::kBadRank,
                       "uniform matroid needs 0 <= r <= n, got r=" +
                           std::to_string(rank) + " n=" + std::to_string(size));
  }
  std::vector<Element> ground;
  for (int i = 1; i <= size; ++i) ground.push_back(std::to_string(i));
  std::vector<Mask> circuits;
  for (Mask s : detail::all_subsets(static_cast<std::size_t>(size))) {
    if (std::popcount(s) == rank + 1) circuits.push_back(s);
  }
  return CircuitMatroid::from_clutter(
      Clutter(detail::TrustedTag{}, std::move(ground), std::move(circuits)));
}

/// Same matroid with the i-th smallest label replaced by @p labels[i].
inline CircuitMatroid relabel(const CircuitMatroid& n,
                              const std::vector<Element>& labels) {
  if (labels.size() != n.ground().size()) {
    throw ClutterError(ErrorKind::kInvalidSpec, "relabel needs one label per element");
  }
  std::vector<std::vector<Element>> circuits;
  for (Mask c : n.circuits().row_masks()) {
    std::vector<Element> members;
    for (std::size_t i : detail::positions(c)) members.push_back(labels[i]);
    circuits.push_back(std::move(members));
  }
  return CircuitMatroid::from_circuits(labels, circuits);
}

/// Graphic matroid of K4: edges "12".."34", circuits are the four triangles
/// and the three 4-cycles.
inline CircuitMatroid k4_graphic() {
  return CircuitMatroid::from_circuits(
      {"12", "13", "14", "23", "24", "34"},
      {{"12", "13", "23"},
       {"12", "14", "24"},
       {"13", "14", "34"},
       {"23", "24", "34"},
       {"12", "23", "34", "14"},
       {"12", "24", "34", "13"},
       {"13", "23", "24", "14"}});
}

/// File format: a `matroid-circuits` line, then the clutter format with the
/// circuits as rows.
inline std::string serialize_matroid(const CircuitMatroid& n) {
  return "matroid-circuits\n" + serialize(n.circuits());
}

inline CircuitMatroid parse_matroid(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t k = 0;
  while (k < lines.size() && (lines[k].empty() || lines[k].front() == '#')) ++k;
  std::string_view header = k < lines.size() ? std::string_view(lines[k]) : "";
  if (!header.empty() && header.back() == '\r') header.remove_suffix(1);
  if (header != "matroid-circuits") {
    throw ClutterError(ErrorKind::kParseError,
                       "line " + std::to_string(k + 1) +
                           ": expected 'matroid-circuits' header");
  }
  return CircuitMatroid::from_clutter(detail::parse_clutter_lines(lines, k + 1));
}

}  // namespace clutterkit

#endif  // CLUTTERKIT_MATROID_HPP
