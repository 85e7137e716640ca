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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion with
// its wall time against a pinned budget; exits non-zero on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cimat/axioms.h"
#include "cimat/errors.h"
#include "cimat/matroid.h"
#include "cimat/models.h"
#include "cimat/oriented.h"
#include "oracles.h"

namespace cimat {
namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

// Matroids keyed by their full rank table, for set comparisons.
std::vector<int> rank_table(const Matroid& m) {
  std::vector<int> t;
  for (Subset s = 0; s < (Subset{1} << m.ground_size()); ++s) t.push_back(m.rank(s));
  return t;
}

// Both directions of the CI-structure <-> matroid correspondence on [n]:
// every survivor maps to an oracle matroid and back, and every oracle
// matroid's structure is a survivor.
void check_bijection(int n, const std::vector<CIStructure>& survivors,
                     const std::vector<Matroid>& matroids, Outcome& o) {
  if (survivors.size() != matroids.size()) {
    o.fail("count " + std::to_string(survivors.size()) + " vs " + std::to_string(matroids.size()));
    return;
  }
  std::set<std::vector<int>> oracle_tables;
  for (const Matroid& m : matroids) oracle_tables.insert(rank_table(m));
  std::set<std::vector<int>> seen;
  for (const CIStructure& g : survivors) {
    try {
      Matroid m = matroid_from_ci(g);
      if (ci_of_matroid(m) != g) o.fail("[[M]] != G after rank recovery");
      if (!oracle_tables.contains(rank_table(m))) o.fail("recovered matroid not in oracle list");
      seen.insert(rank_table(m));
    } catch (const Error& e) {
      o.fail(std::string("rank_from_ci raised: ") + e.what());
    }
  }
  if (seen.size() != oracle_tables.size()) o.fail("recovered matroids not distinct");
  std::set<std::vector<std::uint64_t>> survivor_words;
  for (const CIStructure& g : survivors) survivor_words.emplace(g.words().begin(), g.words().end());
  for (const Matroid& m : matroids) {
    CIStructure g = ci_of_matroid(m);
    if (!survivor_words.contains({g.words().begin(), g.words().end()})) o.fail("oracle matroid missing from scan");
  }
  o.note = "n=" + std::to_string(n) + ": " + std::to_string(survivors.size()) + " structures";
}

Outcome criterion1() {
  Outcome o;
  const int n = 3;
  std::vector<CIStructure> survivors;
  std::size_t total = statement_count(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
    CIStructure g = CIStructure::from_words(n, {mask});
    bool lib = is_matroid_ci(g);
    if (lib != (oracle::semigraphoid_by_definition(g) && oracle::mci_by_definition(g))) {
      o.fail("axiom checker disagrees with definition");
    }
    if (lib) survivors.push_back(g);
  }
  auto matroids = enumerate_loopless_matroids(n);
  if (matroids.size() != oracle::loopless_independence_families(n).size()) {
    o.fail("enumeration disagrees with brute-force families");
  }
  if (o.ok) check_bijection(n, survivors, matroids, o);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const int n = 4;
  auto survivors = enumerate_matroid_ci(n);
  auto matroids = enumerate_loopless_matroids(n);
  auto families = oracle::loopless_independence_families(n);
  if (matroids.size() != families.size()) o.fail("enumeration disagrees with brute-force families");
  if (o.ok) check_bijection(n, survivors, matroids, o);
  if (o.ok) o.note += " of 2^24 scanned";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t checked = 0;
  std::size_t profiles = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Matroid& m : enumerate_loopless_matroids(n)) {
      ++checked;
      CIStructure g = ci_of_matroid(m);
      if (!is_matroid_ci(g)) o.fail("[[M]] fails SG+MCI");
      try {
        if (rank_from_ci(g) != m.rank_function()) o.fail("rank_from_ci([[M]]) != r_M");
      } catch (const Error& e) {
        o.fail(std::string("rank_from_ci raised: ") + e.what());
      }
      SetFamily ind = independent_sets_from_ci(g);
      if (ind != m.independent_sets() ||
          std::vector<Subset>(ind.members().begin(), ind.members().end()) !=
              oracle::independent_sets(m)) {
        o.fail("independent sets mismatch");
      }
      for (const CIStatement& s : CIStructure::full(n).statements()) {
        DependenceProfile p = dependence_profile(m, s);
        ++profiles;
        if (!p.consistent()) o.fail("profile characterizations disagree at " + to_string(s));
        if (p.strict_inequality == g.contains(s)) o.fail("profile disagrees with [[M]]");
      }
    }
  }
  if (o.ok) {
    o.note = std::to_string(checked) + " matroids, " + std::to_string(profiles) + " profiles";
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::vector<Matroid> all;
  for (int n = 1; n <= 4; ++n) {
    auto ms = enumerate_loopless_matroids(n);
    all.insert(all.end(), ms.begin(), ms.end());
  }
  std::size_t cases = 0;
  for (const Matroid& m : all) {
    int n = m.ground_size();
    CIStructure g = ci_of_matroid(m);
    for (Subset a = 0; a < (Subset{1} << n); ++a) {
      cases += 2;
      if (ci_of_matroid(matroid_delete(m, a)) != deletion(g, a).structure) {
        o.fail("deletion mismatch");
      }
      if (ci_of_matroid(normalize_loopless(matroid_contract(m, a))) != contraction(g, a).structure) {
        o.fail("contraction mismatch");
      }
    }
    ++cases;
    if (ci_of_matroid(normalize_loopless(matroid_dual(m))) != dual(g)) o.fail("dual mismatch");
    for (const Matroid& m2 : all) {
      ++cases;
      if (ci_of_matroid(matroid_direct_sum(m, m2)) != direct_sum(g, ci_of_matroid(m2))) {
        o.fail("direct sum mismatch");
      }
    }
  }
  if (o.ok) o.note = std::to_string(all.size()) + " matroids, " + std::to_string(cases) + " equalities";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int m = 4; m <= 6; ++m) {
    CIStructure g = g_family(m);
    if (is_matroid_ci(g)) o.fail("G_" + std::to_string(m) + " passes SG+MCI");
    Subset rest = full_set(m) & ~make_subset({0, 1, 2});
    auto ws = check_mci(g);
    bool found = std::any_of(ws.begin(), ws.end(), [&](const ViolationWitness& w) {
      return w.elements == std::vector<int>{0, 1, 2} && w.k == 0 && w.l == rest &&
             reproduces(w, g);
    });
    if (!found) o.fail("witness ((12|),(13|24..m)) missing for m=" + std::to_string(m));
    // Both halves of the pair are non-members.
    if (g.contains(0, 1, 0) || g.contains(0, 2, bit(1) | rest)) o.fail("witness statements wrong");
    for (int e = 0; e < m; ++e) {
      if (!is_matroid_ci(deletion(g, bit(e)).structure)) o.fail("deletion not a matroid");
      if (!is_matroid_ci(contraction(g, bit(e)).structure)) o.fail("contraction not a matroid");
    }
  }
  if (o.ok) o.note = "m=4,5,6; 30 single-element minors";
  return o;
}

struct Config {
  std::uint64_t seed;
  VectorConfiguration v;
};

std::vector<Config> configurations() {
  std::vector<Config> out;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    int n = 2 + static_cast<int>(seed % 6);
    int d = 1 + static_cast<int>((seed / 6) % 4);
    out.push_back({seed, random_configuration(d, n, -3, 3, seed)});
  }
  return out;
}

Outcome criterion6() {
  Outcome o;
  std::size_t signed_circuits = 0;
  for (const Config& c : configurations()) {
    std::string tag = " (seed " + std::to_string(c.seed) + ")";
    try {
      SignedCircuitSet circuits = signed_circuits_from_vectors(c.v);
      signed_circuits += circuits.circuits().size();
      if (!check_circuit_axioms(circuits).empty()) o.fail("circuit axioms fail" + tag);
      if (underlying_matroid(circuits) != linear_matroid(c.v)) o.fail("wrong support matroid" + tag);
      OrientedCIStructure sigma = sigma_of_oriented_matroid(circuits);
      if (!check_oci(sigma).empty()) o.fail("OCI axioms fail" + tag);
      if (sigma.zero_set() != ci_of_matroid(linear_matroid(c.v))) o.fail("zero set != [[M]]" + tag);
      if (oriented_matroid_from_sigma(sigma) != circuits) o.fail("recovery differs" + tag);
    } catch (const Error& e) {
      o.fail(std::string("raised: ") + e.what() + tag);
    }
  }
  if (o.ok) o.note = "120 configurations, " + std::to_string(signed_circuits) + " signed circuits";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t statements = 0;
  for (const Config& c : configurations()) {
    std::string tag = " (seed " + std::to_string(c.seed) + ")";
    try {
      OrientedCIStructure via_circuits = sigma_of_oriented_matroid(signed_circuits_from_vectors(c.v));
      Chirotope chi = chirotope_from_vectors(c.v);
      OrientedCIStructure via_chi = sigma_from_chirotope(chi);
      OrientedCIStructure via_negated = sigma_from_chirotope(-chi);
      statements += statement_count(c.v.size());
      if (via_chi != via_circuits) o.fail("routes differ" + tag);
      if (via_negated != via_circuits) o.fail("negated chirotope differs" + tag);
    } catch (const Error& e) {
      o.fail(std::string("raised: ") + e.what() + tag);
    }
  }
  Chirotope u23 = chirotope_from_vectors(oracle::vectors({{1, 0, 1}, {0, 1, 1}}));
  int naive = oracle::naive_chirotope_sigma(u23, 0, 1, 0);
  int computed = sigma_from_chirotope(u23).sign(CIStatement::make(0, 1, 0));
  if (naive != 1 || computed != 0) {
    o.fail("U23 (12|): naive " + std::to_string(naive) + ", computed " +
           std::to_string(computed));
  }
  if (o.ok) o.note = std::to_string(statements) + " statements; U23 (12|) naive +1, computed 0";
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    int n = 2 + static_cast<int>(seed % 4);
    RationalMatrix sigma = random_covariance(n, seed);
    try {
      check_covariance(sigma);
      if (!check_gaussoid(gaussian_ci(sigma)).empty()) {
        o.fail("gaussian_ci not a gaussoid (seed " + std::to_string(seed) + ")");
      }
    } catch (const Error& e) {
      o.fail(std::string("raised: ") + e.what());
    }
  }
  RationalMatrix tenth(2, 2, {1, Rational(1, 10), Rational(1, 10), 1});
  if (gaussian_ci(tenth) != CIStructure(2) || gaussian_ci(tenth) != ci_of_matroid(uniform(1, 2))) {
    o.fail("[[1,1/10],[1/10,1]] is not the empty structure");
  }
  std::size_t positive = 0;
  std::size_t total = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const Matroid& m : enumerate_loopless_matroids(n)) {
      ++total;
      // Circuits pairwise disjoint of size two.
      bool structural = true;
      Subset used = 0;
      for (Subset c : m.circuits()) {
        structural = structural && cardinality(c) == 2 && (used & c) == 0;
        used |= c;
      }
      bool decided = gaussoid_matroid_decision(m);
      bool checked = is_gaussoid(ci_of_matroid(m));
      if (decided != structural || decided != checked) {
        o.fail("gaussoid routes disagree on n=" + std::to_string(n));
      }
      positive += decided ? 1 : 0;
    }
  }
  if (o.ok) {
    o.note = "120 covariances; " + std::to_string(positive) + " of " + std::to_string(total) +
             " matroids are gaussoids";
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace cimat

int main() {
  using namespace cimat;
  const std::vector<Criterion> criteria{
      {1, "bijection n=3", 1.0, criterion1},
      {2, "bijection n=4 (2^24 scan)", 60.0, criterion2},
      {3, "matroids n<=5: axioms, rank, independence, profiles", 60.0, criterion3},
      {4, "operation compatibility n<=4", 60.0, criterion4},
      {5, "G_m excluded minors m=4..6", 10.0, criterion5},
      {6, "signed circuits <-> oriented CI round trip", 60.0, criterion6},
      {7, "chirotope route = signed-circuit route", 60.0, criterion7},
      {8, "gaussoid suite", 60.0, criterion8},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.budget_seconds) o.fail("over time budget");
    failures += o.ok ? 0 : 1;
    std::printf("criterion %d %s: %s [%.2fs / %.0fs] %s\n", c.id, o.ok ? "PASS" : "FAIL", c.name,
                secs, c.budget_seconds, o.note.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
