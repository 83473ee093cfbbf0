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

/** @file splitter.hpp
 *  @brief Connectivity- and minor-preserving single-element removals.
 *
 *  For connected clutters M and N with N a proper minor of M, some element v
 *  of M has M\v or M/v connected with N still a minor. find_splitter()
 *  searches for such a step; chain() iterates it down to N, so every clutter
 *  along the chain is connected.
 *
 *  Candidates are restricted to E(M) - E(N) (removing an element of N would
 *  lose the minor). In the guided order, minimal black vertices of G(M) come
 *  first, then elements with a twin, then the rest, ascending within each
 *  class; deletion is tried before contraction for every candidate.
 */

#ifndef CLUTTERKIT_SPLITTER_HPP
#define CLUTTERKIT_SPLITTER_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clutterkit/clutter.hpp"
#include "clutterkit/error.hpp"
#include "clutterkit/graphview.hpp"
#include "clutterkit/minor.hpp"

namespace clutterkit {

enum class Operation { kDelete, kContract };

constexpr std::string_view to_string(Operation op) {
  return op == Operation::kDelete ? "delete" : "contract";
}

inline Clutter apply(const Clutter& m, std::string_view element, Operation op) {
  return op == Operation::kDelete ? delete_element(m, element)
                                  : contract(m, element);
}

struct SplitterStep {
  Element element;
  Operation op;
  Clutter result;
  friend bool operator==(const SplitterStep&, const SplitterStep&) = default;
};

struct SplitterChain {
  Clutter start;
  std::vector<SplitterStep> steps;

  const Clutter& final_clutter() const {
    return steps.empty() ? start : steps.back().result;
  }
};

enum class CandidateOrder { kGuided, kAscending };

struct SplitterOptions {
  CandidateOrder order = CandidateOrder::kGuided;
  /// Off only for forensic use on inputs known to violate the hypotheses.
  bool check_preconditions = true;
};

/// No candidate step exists for (M, N). Carries both clutters so the caller
/// can build a counterexample_report().
class TheoremCounterexample : public ClutterError {
 public:
  TheoremCounterexample(Clutter m, Clutter n)
      : ClutterError(ErrorKind::kTheoremCounterexample,
                     "no element of M can be removed keeping connectivity "
                     "and the minor\nM:\n" + serialize(m) + "N:\n" + serialize(n)),
        m_(std::move(m)),
        n_(std::move(n)) {}

  const Clutter& m() const noexcept { return m_; }
  const Clutter& n() const noexcept { return n_; }

 private:
  Clutter m_;
  Clutter n_;
};

/// Elements of E(M) - E(N) in the order find_splitter() tries them.
inline std::vector<Element> splitter_candidates(const Clutter& m,
                                                const Clutter& n,
                                                CandidateOrder order) {
  std::vector<Element> rest;
  for (const auto& e : m.ground()) {
    if (!n.contains(e)) rest.push_back(e);
  }
  if (order == CandidateOrder::kAscending) return rest;

  const IncidenceGraph g = incidence_graph(m);
  const auto minimal = minimal_black_vertices(g);
  std::vector<Element> first, second, third;
  for (auto& e : rest) {
    if (std::binary_search(minimal.begin(), minimal.end(), e)) {
      first.push_back(std::move(e));
    } else if (!twins(g, e).empty()) {
      second.push_back(std::move(e));
    } else {
      third.push_back(std::move(e));
    }
  }
  first.insert(first.end(), second.begin(), second.end());
  first.insert(first.end(), third.begin(), third.end());
  return first;
}

namespace detail {

inline void check_splitter_preconditions(const Clutter& m, const Clutter& n) {
  if (!is_connected(m)) {
    throw ClutterError(ErrorKind::kPreconditionViolation, "M is not connected");
  }
  if (!is_connected(n)) {
    throw ClutterError(ErrorKind::kPreconditionViolation, "N is not connected");
  }
  if (!is_proper_minor(m, n)) {
    throw ClutterError(ErrorKind::kPreconditionViolation,
                       "N is not a proper minor of M");
  }
}

}  // namespace detail

inline SplitterStep find_splitter(const Clutter& m, const Clutter& n,
                                  const SplitterOptions& options = {}) {
  if (options.check_preconditions) detail::check_splitter_preconditions(m, n);
  for (const auto& v : splitter_candidates(m, n, options.order)) {
    for (Operation op : {Operation::kDelete, Operation::kContract}) {
      Clutter result = apply(m, v, op);
      if (is_connected(result) && is_minor(result, n)) {
        return {v, op, std::move(result)};
      }
    }
  }
  throw TheoremCounterexample(m, n);
}

/// Steps from @p m down to exactly @p n, every intermediate connected.
inline SplitterChain chain(const Clutter& m, const Clutter& n,
                           const SplitterOptions& options = {}) {
  if (options.check_preconditions) {
    if (!is_connected(m) || !is_connected(n)) {
      throw ClutterError(ErrorKind::kPreconditionViolation,
                         "chain endpoints must be connected");
    }
    if (!is_minor(m, n)) {
      throw ClutterError(ErrorKind::kPreconditionViolation,
                         "target is not a minor of the start");
    }
  }
  SplitterChain out{m, {}};
  // Once N is a minor and differs from the current clutter, it is a proper
  // minor, so each iteration is a valid find_splitter call.
  while (out.final_clutter() != n) {
    out.steps.push_back(find_splitter(out.final_clutter(), n,
                                      {options.order, false}));
  }
  return out;
}

/// The clutter with no elements reachable from @p m: ({}, {}) normally, and
/// ({}, {∅}) when M has the empty row, since every minor keeps that row.
inline Clutter empty_target(const Clutter& m) {
  if (m.has_empty_row()) return Clutter(detail::TrustedTag{}, {}, {0});
  return Clutter{};
}

inline SplitterChain chain_to_empty(const Clutter& m,
                                    const SplitterOptions& options = {}) {
  if (m.empty()) {
    throw ClutterError(ErrorKind::kPreconditionViolation,
                       "chain_to_empty needs a nonempty ground set");
  }
  if (!is_connected(m)) {
    throw ClutterError(ErrorKind::kPreconditionViolation, "M is not connected");
  }
  return chain(m, empty_target(m), options);
}

/// `<op> <element>` then the resulting clutter, indented by two spaces.
inline std::string format_step(const SplitterStep& step) {
  std::string out = std::string(to_string(step.op)) + " " + step.element + "\n";
  for (const auto& line : detail::split_lines(serialize(step.result))) {
    out += "  " + line + "\n";
  }
  return out;
}

inline std::string format_chain(const SplitterChain& c) {
  std::string out;
  for (const auto& s : c.steps) out += format_step(s);
  return out;
}

namespace detail {

inline std::string join(const std::vector<Element>& items) {
  if (items.empty()) return "-";
  std::string out;
  for (const auto& i : items) out += (out.empty() ? "" : " ") + i;
  return out;
}

inline std::string describe(const VertexSet& vs) {
  std::string out = "{";
  for (const auto& v : vs) out += (out.size() > 1 ? " " : "") + v.name;
  return out + "}";
}

}  // namespace detail

/// Forensic dump for a failed find_splitter(): every candidate step with the
/// reason it was rejected, then the incidence-graph structure of M.
inline std::string counterexample_report(const Clutter& m, const Clutter& n) {
  std::string out = "M:\n" + serialize(m) + "N:\n" + serialize(n);
  out += "connected M=" + std::string(is_connected(m) ? "yes" : "no") +
         " N=" + (is_connected(n) ? "yes" : "no") +
         " proper-minor=" + (is_proper_minor(m, n) ? "yes" : "no") + "\n";
  out += "candidates:\n";
  for (const auto& v : m.ground()) {
    if (n.contains(v)) continue;
    for (Operation op : {Operation::kDelete, Operation::kContract}) {
      const Clutter r = apply(m, v, op);
      const bool conn = is_connected(r);
      const bool minor = is_minor(r, n);
      std::string verdict = conn && minor   ? "ok"
                            : !conn && !minor ? "connectivity+minor failed"
                            : !conn           ? "connectivity failed"
                                              : "minor failed";
      out += "  " + std::string(to_string(op)) + " " + v + ": " + verdict + "\n";
    }
  }
  const IncidenceGraph g = incidence_graph(m);
  const auto minimal = minimal_black_vertices(g);
  out += "minimal-black: " + detail::join(minimal) + "\n";
  out += "twins:\n";
  for (const auto& v : m.ground()) {
    out += "  " + v + ": " + detail::join(twins(g, v)) + "\n";
  }
  out += "good-components:\n";
  for (const auto& gc : minimal_good_components(g)) {
    out += "  " + gc.vertex + ": " + detail::describe(gc.component) +
           (gc.minimal ? " minimal" : "") + "\n";
  }
  return out;
}

}  // namespace clutterkit

#endif  // CLUTTERKIT_SPLITTER_HPP
