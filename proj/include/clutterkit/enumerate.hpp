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

/** @file enumerate.hpp
 *  @brief Every clutter on a small labeled ground set, and the exhaustive
 *         checks run over them.
 *
 *  Antichains are grown over the subsets of the ground set taken in canonical
 *  row order; a subset is only added when it is incomparable to everything
 *  already chosen, so no family is visited twice and non-antichains are never
 *  built. Output order is the depth-first order of that growth with the
 *  "skip" branch first.
 */

#ifndef CLUTTERKIT_ENUMERATE_HPP
#define CLUTTERKIT_ENUMERATE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "clutterkit/blocker.hpp"
#include "clutterkit/clutter.hpp"
#include "clutterkit/error.hpp"
#include "clutterkit/graphview.hpp"
#include "clutterkit/minor.hpp"
#include "clutterkit/splitter.hpp"

namespace clutterkit {

inline constexpr std::size_t kMaxEnumerationSize = 5;
inline constexpr std::size_t kMaxIdentitySize = 4;

/// Labels "1" .. "n".
inline std::vector<Element> numbered_labels(std::size_t n) {
  std::vector<Element> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

inline std::vector<Clutter> enumerate_clutters(std::vector<Element> labels) {
  if (labels.size() > kMaxEnumerationSize) {
    throw ClutterError(ErrorKind::kTooLarge,
                       "enumeration is limited to " +
                           std::to_string(kMaxEnumerationSize) + " elements");
  }
  // validates labels and sorts them
  const Clutter shell = new_clutter(std::move(labels), {});
  const std::size_t n = shell.size();

  std::vector<Mask> subsets(std::size_t{1} << n);
  for (std::size_t s = 0; s < subsets.size(); ++s) subsets[s] = s;
  std::sort(subsets.begin(), subsets.end(), detail::canonical_less);

  std::vector<Clutter> out;
  std::vector<Mask> chosen;
  auto grow = [&](auto&& self, std::size_t i) -> void {
    if (i == subsets.size()) {
      out.emplace_back(detail::TrustedTag{}, shell.ground(), chosen);
      return;
    }
    self(self, i + 1);
    const Mask s = subsets[i];
    const bool comparable =
        std::any_of(chosen.begin(), chosen.end(), [s](Mask c) {
          return detail::is_subset(c, s) || detail::is_subset(s, c);
        });
    if (!comparable) {
      chosen.push_back(s);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  grow(grow, 0);
  return out;
}

/// All clutters on the ground set {1, ..., n}.
inline std::vector<Clutter> enumerate_clutters(std::size_t n) {
  if (n > kMaxEnumerationSize) {
    throw ClutterError(ErrorKind::kTooLarge,
                       "enumeration is limited to n <= " +
                           std::to_string(kMaxEnumerationSize));
  }
  return enumerate_clutters(numbered_labels(n));
}

inline std::vector<Clutter> enumerate_connected(std::size_t n) {
  std::vector<Clutter> all = enumerate_clutters(n);
  std::erase_if(all, [](const Clutter& m) { return !is_connected(m); });
  return all;
}

/// Tally for one family of checks.
struct CheckTally {
  std::string family;
  std::size_t tested = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;

  std::size_t counterexamples() const { return tested - passed; }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++tested;
    if (ok) {
      ++passed;
    } else {
      failures.push_back(describe());
    }
  }

  void merge(const CheckTally& other) {
    tested += other.tested;
    passed += other.passed;
    failures.insert(failures.end(), other.failures.begin(),
                    other.failures.end());
  }
};

struct VerificationReport {
  std::size_t n = 0;
  std::vector<CheckTally> families;

  bool ok() const {
    return std::all_of(families.begin(), families.end(),
                       [](const CheckTally& t) { return t.counterexamples() == 0; });
  }

  const CheckTally* find(std::string_view family) const {
    for (const auto& t : families) {
      if (t.family == family) return &t;
    }
    return nullptr;
  }

  /// One summary line per family, with failure details indented below it.
  std::string to_text() const {
    std::string out;
    for (const auto& t : families) {
      out += t.family + " n=" + std::to_string(n) +
             " tested=" + std::to_string(t.tested) +
             " passed=" + std::to_string(t.passed) +
             " counterexamples=" + std::to_string(t.counterexamples()) + "\n";
      for (const auto& f : t.failures) out += "  " + f + "\n";
    }
    return out;
  }
};

/// serialize() on one line, rows separated by "; ".
inline std::string one_line(const Clutter& m) {
  std::string s = serialize(m);
  s.pop_back();
  std::string out;
  for (char c : s) {
    if (c == '\n') {
      out += "; ";
    } else {
      out += c;
    }
  }
  return out;
}

/// Connected proper minors of @p m, deduplicated by value, ascending.
inline std::vector<Clutter> connected_proper_minors(const Clutter& m) {
  std::set<Clutter> seen;
  for_each_minor(m, [&](const MinorSpec& spec, const Clutter& minor) {
    if (!spec.is_identity() && is_connected(minor)) seen.insert(minor);
  });
  return {seen.begin(), seen.end()};
}

/// One element with one empty row: connected, yet its incidence graph is
/// not.
inline bool is_exceptional(const Clutter& m) {
  return m.size() == 1 && m.has_empty_row();
}

namespace detail {

/// Runs @p work(i, tallies) for i in [0, count) on @p jobs threads, one tally
/// per name in @p families, and merges per-item tallies in index order so the
/// result does not depend on jobs.
inline std::vector<CheckTally> parallel_tally(
    const std::vector<std::string>& families, std::size_t count,
    std::size_t jobs,
    const std::function<void(std::size_t, std::vector<CheckTally>&)>& work) {
  std::vector<std::vector<CheckTally>> per_item(
      count, std::vector<CheckTally>(families.size()));
  auto worker = [&](std::size_t offset, std::size_t stride) {
    for (std::size_t i = offset; i < count; i += stride) work(i, per_item[i]);
  };
  jobs = std::max<std::size_t>(1, jobs);
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < jobs; ++k) pool.emplace_back(worker, k, jobs);
  }
  std::vector<CheckTally> total;
  for (const auto& name : families) total.push_back({name, 0, 0, {}});
  for (const auto& item : per_item) {
    for (std::size_t f = 0; f < families.size(); ++f) total[f].merge(item[f]);
  }
  return total;
}

}  // namespace detail

/// Runs find_splitter() on every connected clutter on {1..n} against each of
/// its connected proper minors. The `theorem` family covers every pair; the
/// `theorem-nonexceptional` family repeats the tally over the pairs whose
/// target is not a single element with the empty row.
inline VerificationReport verify_theorem(std::size_t n, std::size_t jobs = 1) {
  const std::vector<Clutter> ms = enumerate_connected(n);
  auto families = detail::parallel_tally(
      {"theorem", "theorem-nonexceptional"}, ms.size(), jobs,
      [&](std::size_t i, std::vector<CheckTally>& tally) {
        const Clutter& m = ms[i];
        for (const Clutter& target : connected_proper_minors(m)) {
          bool ok = true;
          try {
            find_splitter(m, target);
          } catch (const TheoremCounterexample&) {
            ok = false;
          }
          auto describe = [&] {
            return "counterexample M=[" + one_line(m) + "] N=[" +
                   one_line(target) + "]";
          };
          tally[0].record(ok, describe);
          if (!is_exceptional(target)) tally[1].record(ok, describe);
        }
      });
  return {n, std::move(families)};
}

/// Checks, over every clutter on {1..n}: commutativity of deletion and
/// contraction, the blocker involution, the blocker deletion/contraction
/// swap, clutter vs incidence-graph connectivity, twin contraction, and the
/// incidence graph of a deletion.
inline VerificationReport verify_identities(std::size_t n) {
  if (n > kMaxIdentitySize) {
    throw ClutterError(ErrorKind::kTooLarge,
                       "identity verification is limited to n <= " +
                           std::to_string(kMaxIdentitySize));
  }
  const std::vector<Clutter> all = enumerate_clutters(n);
  CheckTally comm{"commutativity", 0, 0, {}},
      invol{"blocker-involution", 0, 0, {}},
      swap{"duality-swap", 0, 0, {}},
      conn{"connectivity-equivalence", 0, 0, {}},
      twin{"twin-contraction", 0, 0, {}}, delg{"deletion-graph", 0, 0, {}};

  for (const Clutter& m : all) {
    const std::string ml = one_line(m);
    const Clutter b = blocker(m);
    invol.record(blocker(b) == m, [&] { return "M=[" + ml + "]"; });
    conn.record(graph_connected_iff_clutter_connected(m),
                [&] { return "M=[" + ml + "]"; });
    const IncidenceGraph g = incidence_graph(m);
    const bool m_connected = is_connected(m);

    for (const auto& v : m.ground()) {
      auto at = [&](const char* what) {
        return [&ml, &v, what] {
          return std::string(what) + " M=[" + ml + "] v=" + v;
        };
      };
      swap.record(blocker(delete_element(m, v)) == contract(b, v),
                  at("b(M\\v)=b(M)/v"));
      swap.record(blocker(contract(m, v)) == delete_element(b, v),
                  at("b(M/v)=b(M)\\v"));
      delg.record(incidence_graph(delete_element(m, v)) ==
                      delete_closed_neighbourhood(g, v),
                  at("G(M\\v)=G(M)\\N[v]"));
      if (m_connected && !twins(g, v).empty()) {
        const Clutter mv = contract(m, v);
        twin.record(incidence_graph(mv) == delete_black_vertex(g, v) &&
                        is_connected(mv),
                    at("G(M/v)=G(M)\\v"));
      }
      for (const auto& w : m.ground()) {
        if (w == v) continue;
        auto pair = [&ml, &v, &w](const char* what) {
          return [&ml, &v, &w, what] {
            return std::string(what) + " M=[" + ml + "] v=" + v + " v'=" + w;
          };
        };
        comm.record(delete_element(delete_element(m, v), w) ==
                        delete_element(delete_element(m, w), v),
                    pair("(M\\v)\\v'"));
        comm.record(contract(contract(m, v), w) == contract(contract(m, w), v),
                    pair("(M/v)/v'"));
        comm.record(contract(delete_element(m, v), w) ==
                        delete_element(contract(m, w), v),
                    pair("(M\\v)/v'"));
      }
    }
  }
  return {n, {comm, invol, swap, conn, twin, delg}};
}

}  // namespace clutterkit

#endif  // CLUTTERKIT_ENUMERATE_HPP
