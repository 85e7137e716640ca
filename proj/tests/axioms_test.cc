// Copyright 2026 The Authors.
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

#include "cimat/axioms.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cimat/errors.h"
#include "cimat/matroid.h"
#include "oracles.h"

namespace cimat {
namespace {

using oracle::ci;

CIStructure u23() { return ci(3, {{1, 2, {}}, {1, 3, {}}, {2, 3, {}}}); }

bool has_witness(const std::vector<ViolationWitness>& ws, Axiom a, std::vector<int> elements,
                 Subset k, Subset l) {
  return std::any_of(ws.begin(), ws.end(), [&](const ViolationWitness& w) {
    return w.axiom == a && w.elements == elements && w.k == k && w.l == l;
  });
}

TEST(Semigraphoid, FullAndEmptyPass) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_TRUE(check_semigraphoid(CIStructure::full(n)).empty());
    EXPECT_TRUE(check_semigraphoid(CIStructure(n)).empty());
  }
}

TEST(Semigraphoid, ReportsTheFailingInstantiation) {
  CIStructure g = ci(3, {{1, 2, {}}, {1, 3, {2}}});
  auto ws = check_semigraphoid(g);
  ASSERT_FALSE(ws.empty());
  EXPECT_TRUE(has_witness(ws, Axiom::kSemigraphoid, {0, 1, 2}, 0, 0));
  for (const auto& w : ws) EXPECT_TRUE(reproduces(w, g)) << format_witness(w);
  EXPECT_EQ(format_witness(ws.front()).substr(0, 3), "SG ");
}

TEST(Mci, FullStructureAndUniformPass) {
  EXPECT_TRUE(check_mci(CIStructure::full(4)).empty());
  EXPECT_TRUE(check_mci(u23()).empty());
}

TEST(Mci, ExcludedMinorFamilyViolation) {
  CIStructure g4 = g_family(4);
  auto ws = check_mci(g4);
  ASSERT_FALSE(ws.empty());
  EXPECT_TRUE(has_witness(ws, Axiom::kMci, {0, 1, 2}, 0, bit(3)));
  EXPECT_FALSE(g4.contains(0, 1, 0));
  EXPECT_FALSE(g4.contains(0, 2, bit(1) | bit(3)));
  for (const auto& w : ws) EXPECT_TRUE(reproduces(w, g4));
}

TEST(Mci, WitnessFormat) {
  auto ws = check_mci(g_family(4));
  auto it = std::find_if(ws.begin(), ws.end(), [](const ViolationWitness& w) {
    return w.elements == std::vector<int>{0, 1, 2} && w.k == 0 && w.l == bit(3);
  });
  ASSERT_NE(it, ws.end());
  EXPECT_EQ(format_witness(*it), "MCI 1 2 3 | ; 4");
  EXPECT_NE(it->detail.find("(13|24)"), std::string::npos) << it->detail;
}

TEST(MatroidCi, Examples) {
  EXPECT_TRUE(is_matroid_ci(u23()));
  EXPECT_FALSE(is_matroid_ci(g_family(4)));
  EXPECT_TRUE(is_matroid_ci(CIStructure(2)));
}

TEST(Gaussoid, Examples) {
  EXPECT_TRUE(check_gaussoid(CIStructure::full(4)).empty());
  auto ws = check_gaussoid(u23());
  ASSERT_FALSE(ws.empty());
  // (12|) and (13|) hold but (12|3) does not.
  bool comp = std::any_of(ws.begin(), ws.end(),
                          [](const ViolationWitness& w) { return w.axiom == Axiom::kComposition; });
  EXPECT_TRUE(comp);
  for (const auto& w : ws) EXPECT_TRUE(reproduces(w, u23()));
  // U(1,2) ⊕ U(1,1): 1 and 2 parallel, 3 a coloop.
  // (12|) and (12|3) hold but neither (13|) nor (23|).
  CIStructure weak = oracle::ci(3, {{1, 2, {}}, {1, 2, {3}}});
  auto wws = check_gaussoid(weak);
  ASSERT_EQ(wws.size(), 1u);
  EXPECT_EQ(wws[0].axiom, Axiom::kWeakTransitivity);
  EXPECT_TRUE(reproduces(wws[0], weak));
  CIStructure parallel_plus_coloop = ci_of_matroid(matroid_direct_sum(uniform(1, 2), uniform(1, 1)));
  EXPECT_TRUE(check_gaussoid(parallel_plus_coloop).empty());
}

TEST(Witnesses, SortedByConclusion) {
  auto ws = check_mci(g_family(5));
  EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end(), [](const auto& a, const auto& b) {
    return a.conclusion < b.conclusion;
  }));
}

// Every structure on [3] and a random sample on [4] against the naive
// quantifier-by-quantifier checkers.
TEST(Checkers, AgreeWithDefinitionsExhaustivelyOnThree) {
  for (std::uint64_t w = 0; w < 64; ++w) {
    CIStructure g = CIStructure::from_words(3, {w});
    EXPECT_EQ(check_semigraphoid(g).empty(), oracle::semigraphoid_by_definition(g)) << w;
    EXPECT_EQ(check_mci(g).empty(), oracle::mci_by_definition(g)) << w;
    for (const auto& x : check_semigraphoid(g)) EXPECT_TRUE(reproduces(x, g));
    for (const auto& x : check_mci(g)) EXPECT_TRUE(reproduces(x, g));
    for (const auto& x : check_gaussoid(g)) EXPECT_TRUE(reproduces(x, g));
  }
}

TEST(Checkers, AgreeWithDefinitionsOnRandomFourElementStructures) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    std::uint64_t w = rng() & 0xFFFFFF;
    // Denser halves make passing structures show up too.
    if (trial % 2 == 0) w |= rng() & 0xFFFFFF;
    if (trial % 4 == 0) w |= rng() & 0xFFFFFF;
    CIStructure g = CIStructure::from_words(4, {w});
    EXPECT_EQ(satisfies_semigraphoid(g), oracle::semigraphoid_by_definition(g));
    EXPECT_EQ(satisfies_mci(g), oracle::mci_by_definition(g));
    EXPECT_EQ(satisfies_semigraphoid(g), check_semigraphoid(g).empty());
    EXPECT_EQ(satisfies_mci(g), check_mci(g).empty());
  }
}

TEST(Checkers, RelabelingInvariant) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    CIStructure g = CIStructure::from_words(4, {rng() & 0xFFFFFF});
    Permutation p{0, 1, 2, 3};
    std::shuffle(p.begin(), p.end(), rng);
    CIStructure h = relabel(g, p);
    EXPECT_EQ(satisfies_semigraphoid(g), satisfies_semigraphoid(h));
    EXPECT_EQ(satisfies_mci(g), satisfies_mci(h));
    EXPECT_EQ(is_gaussoid(g), is_gaussoid(h));
  }
}

TEST(CompiledRules, MatchTheCheckersOnThree) {
  CompiledMatroidRules rules(3);
  for (std::uint64_t w = 0; w < 64; ++w) {
    EXPECT_EQ(rules.holds(w), is_matroid_ci(CIStructure::from_words(3, {w}))) << w;
  }
  EXPECT_THROW(CompiledMatroidRules(5), CapacityError);
}

TEST(EnumerateMatroidCi, SmallCountsAndMinorClosure) {
  EXPECT_EQ(enumerate_matroid_ci(2).size(), 2u);
  auto three = enumerate_matroid_ci(3);
  EXPECT_EQ(three.size(), 6u);
  for (const CIStructure& g : enumerate_matroid_ci(4)) {
    for (const Minor& m : minors(g)) EXPECT_TRUE(is_matroid_ci(m.structure));
  }
  EXPECT_THROW(enumerate_matroid_ci(5), CapacityError);
}

TEST(EnumerateMatroidCi, WorkerCountDoesNotChangeOutput) {
  EXPECT_EQ(enumerate_matroid_ci(4, 1), enumerate_matroid_ci(4, 3));
}

}  // namespace
}  // namespace cimat
