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

#include <gtest/gtest.h>

#include <random>

#include "clutterkit/clutter.hpp"
#include "clutterkit/enumerate.hpp"
#include "oracles.hpp"

namespace clutterkit {
namespace {

using Rows = std::vector<std::vector<Element>>;

Clutter path() { return new_clutter({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}); }
Clutter triangle() {
  return new_clutter({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ClutterError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ClutterError thrown";
  return ErrorKind::kParseError;
}

TEST(NewClutter, AcceptsAntichain) {
  const Clutter m = path();
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(m.rows(), (Rows{{"1", "2"}, {"2", "3"}}));
}

TEST(NewClutter, EmptyClutter) {
  const Clutter m = new_clutter({}, {});
  EXPECT_TRUE(m.empty());
  EXPECT_EQ(m.row_count(), 0u);
  EXPECT_EQ(m, Clutter{});
}

TEST(NewClutter, Errors) {
  EXPECT_EQ(kind_of([] { new_clutter({"1", "2"}, {{"1"}, {"1", "2"}}); }),
            ErrorKind::kAntichainViolation);
  EXPECT_EQ(kind_of([] { new_clutter({"1", "2"}, {{"3"}}); }),
            ErrorKind::kForeignElement);
  EXPECT_EQ(kind_of([] { new_clutter({"1", "1"}, {}); }), ErrorKind::kDuplicateLabel);
  EXPECT_EQ(kind_of([] { new_clutter({"a b"}, {}); }), ErrorKind::kInvalidLabel);
  EXPECT_EQ(kind_of([] { new_clutter({"-"}, {}); }), ErrorKind::kInvalidLabel);
  // empty row next to any other row breaks the antichain
  EXPECT_EQ(kind_of([] { new_clutter({"1"}, {{}, {"1"}}); }),
            ErrorKind::kAntichainViolation);
}

TEST(NewClutter, DuplicateRowsCollapse) {
  const Clutter m = new_clutter({"1", "2"}, {{"2", "1"}, {"1", "2", "2"}});
  EXPECT_EQ(m.rows(), (Rows{{"1", "2"}}));
}

TEST(NewClutter, LabelsAreLexicographic) {
  const Clutter m = new_clutter({"10", "9", "b", "a"}, {});
  EXPECT_EQ(m.ground(), (std::vector<Element>{"10", "9", "a", "b"}));
}

TEST(Delete, Examples) {
  EXPECT_EQ(delete_element(path(), "2"), new_clutter({"1", "3"}, {}));
  EXPECT_EQ(delete_element(path(), "1"), new_clutter({"2", "3"}, {{"2", "3"}}));
  EXPECT_EQ(delete_element(new_clutter({"1"}, {}), "1"), Clutter{});
  EXPECT_EQ(kind_of([] { delete_element(path(), "9"); }), ErrorKind::kElementNotFound);
}

TEST(Contract, Examples) {
  const Clutter avb = new_clutter({"a", "v", "b"}, {{"a", "v"}, {"v", "b"}});
  EXPECT_EQ(contract(avb, "v"), new_clutter({"a", "b"}, {{"a"}, {"b"}}));
  EXPECT_EQ(contract(new_clutter({"1", "2"}, {{"1"}, {"2"}}), "1"),
            new_clutter({"2"}, {{}}));
  EXPECT_EQ(contract(triangle(), "3"), new_clutter({"1", "2"}, {{"1"}, {"2"}}));
  EXPECT_EQ(kind_of([] { contract(path(), "x"); }), ErrorKind::kElementNotFound);
}

TEST(ApplyMinor, Examples) {
  EXPECT_EQ(apply_minor(path(), {{"1"}, {"3"}}), new_clutter({"2"}, {{"2"}}));
  EXPECT_EQ(apply_minor(path(), {}), path());
  EXPECT_EQ(apply_minor(new_clutter({"1", "2"}, {{"1", "2"}}), {{"1", "2"}, {}}),
            Clutter{});
}

TEST(ApplyMinor, InvalidSpec) {
  EXPECT_EQ(kind_of([] { apply_minor(path(), {{"1"}, {"1"}}); }), ErrorKind::kInvalidSpec);
  EXPECT_EQ(kind_of([] { apply_minor(path(), {{"7"}, {}}); }), ErrorKind::kInvalidSpec);
}

TEST(FindSeparation, Examples) {
  auto sep = find_separation(new_clutter({"1", "2"}, {{"1"}, {"2"}}));
  ASSERT_TRUE(sep);
  EXPECT_EQ(*sep, (Separation{{"1"}, {"2"}}));
  EXPECT_FALSE(find_separation(new_clutter({"1", "2"}, {{"1", "2"}})));
  EXPECT_FALSE(find_separation(new_clutter({"1"}, {{}})));
}

TEST(FindSeparation, LexicographicallyLeastLeftPart) {
  // components {1,4} {2} {3}: candidates {1,4} {1,2,4} {1,3,4}; as sorted
  // sequences "1 2 4" < "1 3 4" < "1 4"
  const Clutter m = new_clutter({"1", "2", "3", "4"}, {{"1", "4"}, {"2"}, {"3"}});
  EXPECT_EQ(*find_separation(m), (Separation{{"1", "2", "4"}, {"3"}}));
  // empty row straddles nothing
  const Clutter e = new_clutter({"1", "2", "3"}, {{}});
  EXPECT_EQ(*find_separation(e), (Separation{{"1"}, {"2", "3"}}));
}

TEST(FindSeparation, MatchesLexicographicBruteForce) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Clutter& m : enumerate_clutters(n)) {
      // all left parts containing the least element, as sorted sequences
      std::optional<std::vector<Element>> best;
      const auto ref = oracle::from(m);
      for (const auto& x : oracle::all_subsets(ref.ground)) {
        if (x.empty() || x.size() == ref.ground.size() || !x.count(m.ground()[0])) continue;
        const bool ok = std::all_of(ref.rows.begin(), ref.rows.end(), [&](const oracle::Set& a) {
          return oracle::subset(a, x) ||
                 std::none_of(a.begin(), a.end(), [&](const auto& e) { return x.count(e) > 0; });
        });
        std::vector<Element> seq(x.begin(), x.end());
        if (ok && (!best || seq < *best)) best = seq;
      }
      auto sep = find_separation(m);
      ASSERT_EQ(sep.has_value(), best.has_value()) << serialize(m);
      if (sep) {
        EXPECT_EQ(sep->left, *best) << serialize(m);
      }
    }
  }
}

TEST(IsConnected, Examples) {
  EXPECT_TRUE(is_connected(Clutter{}));
  EXPECT_FALSE(is_connected(new_clutter({"1", "2", "3"}, {})));
  EXPECT_TRUE(is_connected(path()));
  EXPECT_TRUE(is_connected(new_clutter({}, {{}})));
}

TEST(IsConnected, AgreesWithDefinitionAndDegenerateCases) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Clutter& m : enumerate_clutters(n)) {
      EXPECT_EQ(is_connected(m), oracle::connected(oracle::from(m))) << serialize(m);
      EXPECT_EQ(is_connected(m), !find_separation(m).has_value());
      if (n <= 1) {
        EXPECT_TRUE(is_connected(m));
      }
      if (n >= 2 && (m.has_empty_row() || m.row_count() == 0)) {
        EXPECT_FALSE(is_connected(m));
      }
    }
  }
}

TEST(Serialize, Format) {
  EXPECT_EQ(serialize(new_clutter({"1", "2"}, {{"1", "2"}})), "elements 1 2\nrow 1 2\n");
  EXPECT_EQ(serialize(new_clutter({"1"}, {{}})), "elements 1\nrow -\n");
  EXPECT_EQ(serialize(Clutter{}), "elements\n");
  // cardinality first, then lexicographic member sequence
  EXPECT_EQ(serialize(new_clutter({"a", "b", "c", "d"}, {{"c", "d"}, {"b"}, {"a", "d"}, {"a", "c"}})),
            "elements a b c d\nrow b\nrow a c\nrow a d\nrow c d\n");
}

TEST(Parse, CommentsAndBlankLines) {
  const Clutter m = parse_clutter("# a path\nelements 3 2 1\n\nrow 2 3\n# mid\nrow 2 1\n");
  EXPECT_EQ(m, path());
}

TEST(Parse, Errors) {
  EXPECT_EQ(kind_of([] { parse_clutter("row 1\n"); }), ErrorKind::kParseError);
  EXPECT_EQ(kind_of([] { parse_clutter(""); }), ErrorKind::kParseError);
  EXPECT_EQ(kind_of([] { parse_clutter("elements 1\nrow\n"); }), ErrorKind::kParseError);
  EXPECT_EQ(kind_of([] { parse_clutter("elements 1\nedge 1\n"); }), ErrorKind::kParseError);
  EXPECT_EQ(kind_of([] { parse_clutter("elements 1 2\nrow 1\nrow 1 2\n"); }),
            ErrorKind::kAntichainViolation);
}

TEST(Serialize, RoundTripIsIdentityOnEnumeratedClutters) {
  std::set<std::string> texts;
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Clutter& m : enumerate_clutters(n)) {
      const std::string text = serialize(m);
      EXPECT_EQ(parse_clutter(text), m);
      texts.insert(text);
      ++count;
    }
  }
  EXPECT_EQ(texts.size(), count);  // injective
}

// Proposition: order of deletion and contraction does not matter.
TEST(Minors, CommutativityAndAntichainPreservation) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Clutter& m : enumerate_clutters(n)) {
      const auto ref = oracle::from(m);
      for (const auto& v : m.ground()) {
        EXPECT_EQ(oracle::from(delete_element(m, v)), oracle::del(ref, v));
        EXPECT_EQ(oracle::from(contract(m, v)), oracle::con(ref, v));
        EXPECT_TRUE(oracle::is_antichain(oracle::from(contract(m, v)).rows));
        for (const auto& w : m.ground()) {
          if (v == w) continue;
          EXPECT_EQ(delete_element(delete_element(m, v), w), delete_element(delete_element(m, w), v));
          EXPECT_EQ(contract(contract(m, v), w), contract(contract(m, w), v));
          EXPECT_EQ(contract(delete_element(m, v), w), delete_element(contract(m, w), v));
        }
      }
    }
  }
}

TEST(ApplyMinor, OrderIndependentAgainstEveryPermutation) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Clutter& m : enumerate_clutters(n)) {
      const auto ref = oracle::from(m);
      // every keep/delete/contract assignment
      std::size_t total = 1;
      for (std::size_t i = 0; i < n; ++i) total *= 3;
      for (std::size_t code = 0; code < total; ++code) {
        MinorSpec spec;
        oracle::Set d, c;
        std::size_t x = code;
        for (const auto& e : m.ground()) {
          if (x % 3 == 1) { spec.deletes.push_back(e); d.insert(e); }
          if (x % 3 == 2) { spec.contracts.push_back(e); c.insert(e); }
          x /= 3;
        }
        const auto got = oracle::from(apply_minor(m, spec));
        for (const auto& r : oracle::all_orders(ref, d, c)) ASSERT_EQ(got, r);
      }
    }
  }
}

TEST(Clutter, RandomLabelsRoundTrip) {
  std::mt19937 rng(7);
  const std::vector<Element> pool = {"x", "y1", "e12", "Z", "10", "2", "a_b", "k"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Element> ground;
    for (const auto& l : pool) {
      if (rng() % 2) ground.push_back(l);
    }
    Rows rows;
    for (int r = 0; r < 4 && !ground.empty(); ++r) {
      std::vector<Element> row;
      for (const auto& l : ground) {
        if (rng() % 3 == 0) row.push_back(l);
      }
      rows.push_back(row);
    }
    oracle::Family fam;
    for (const auto& r : rows) fam.insert(oracle::Set(r.begin(), r.end()));
    fam = oracle::minimal(fam);
    Rows kept;
    for (const auto& s : fam) kept.emplace_back(s.begin(), s.end());
    const Clutter m = new_clutter(ground, kept);
    EXPECT_EQ(parse_clutter(serialize(m)), m);
    EXPECT_EQ(oracle::from(m).rows, fam);
  }
}

}  // namespace
}  // namespace clutterkit
