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

// Slow, obviously-correct reference implementations used only by tests.
// Nothing here calls into the library's algorithms beyond plain data
// accessors, so agreement is meaningful.

#ifndef CIMAT_TESTS_ORACLES_H_
#define CIMAT_TESTS_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <tuple>
#include <vector>

#include "cimat/ci_structure.h"
#include "cimat/matroid.h"
#include "cimat/models.h"
#include "cimat/oriented.h"

namespace cimat::oracle {

// A statement as a plain tuple (i < j, K), 0-based.
using Stmt = std::tuple<int, int, Subset>;
using StmtSet = std::set<Stmt>;

inline Stmt stmt(int i, int j, Subset k) {
  return i < j ? Stmt{i, j, k} : Stmt{j, i, k};
}

// Every statement of A_n by brute force over (i, j, K).
inline std::vector<Stmt> all_statements(int n) {
  std::vector<Stmt> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (Subset k = 0; k < (Subset{1} << n); ++k) {
        if ((k >> i & 1) == 0 && (k >> j & 1) == 0) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

inline StmtSet to_set(const CIStructure& g) {
  StmtSet out;
  for (const Stmt& s : all_statements(g.ground_size())) {
    auto [i, j, k] = s;
    if (g.contains(i, j, k)) out.insert(s);
  }
  return out;
}

inline CIStructure from_set(int n, const StmtSet& set) {
  CIStructure g(n);
  for (auto [i, j, k] : set) g.insert(CIStatement::make(i, j, k));
  return g;
}

// Statements given with 1-based labels, e.g. {{1, 2, {}}, {1, 3, {2}}}.
struct Labeled {
  int i;
  int j;
  std::vector<int> k;
};

inline CIStructure ci(int n, std::initializer_list<Labeled> members) {
  CIStructure g(n);
  for (const Labeled& s : members) {
    Subset k = 0;
    for (int e : s.k) k |= Subset{1} << (e - 1);
    g.insert(CIStatement::make(s.i - 1, s.j - 1, k));
  }
  return g;
}

// [[r]] straight from the modular equality.
inline StmtSet modular_statements(int n, const std::function<int(Subset)>& r) {
  StmtSet out;
  for (const Stmt& s : all_statements(n)) {
    auto [i, j, k] = s;
    Subset bi = Subset{1} << i, bj = Subset{1} << j;
    if (r(bi | k) + r(bj | k) == r(bi | bj | k) + r(k)) out.insert(s);
  }
  return out;
}

// Rank as the largest member of `family` inside S.
inline int rank_from_family(const std::vector<Subset>& family, Subset s) {
  int best = 0;
  for (Subset f : family) {
    if ((f & ~s) == 0) best = std::max(best, std::popcount(f));
  }
  return best;
}

// Independent sets of a matroid on [n] by scanning for the rank condition.
inline std::vector<Subset> independent_sets(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << m.ground_size()); ++s) {
    if (m.rank(s) == std::popcount(s)) out.push_back(s);
  }
  return out;
}

// Every loopless matroid on [n], n <= 4, by testing all 2^(2^n) families of
// subsets for the independence axioms. Returns the families.
inline std::vector<std::vector<Subset>> loopless_independence_families(int n) {
  const int subsets = 1 << n;
  std::vector<std::vector<Subset>> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    auto in = [&](Subset s) { return (fam >> s) & 1; };
    if (!in(0)) continue;
    bool ok = true;
    for (int e = 0; e < n && ok; ++e) ok = in(Subset{1} << e);
    for (Subset s = 0; s < Subset(subsets) && ok; ++s) {
      if (!in(s)) continue;
      for (int e = 0; e < n && ok; ++e) {
        if (s >> e & 1) ok = in(s & ~(Subset{1} << e));
      }
    }
    for (Subset a = 0; a < Subset(subsets) && ok; ++a) {
      if (!in(a)) continue;
      for (Subset b = 0; b < Subset(subsets) && ok; ++b) {
        if (!in(b) || std::popcount(b) <= std::popcount(a)) continue;
        bool augment = false;
        for (int x = 0; x < n && !augment; ++x) {
          if ((b >> x & 1) && !(a >> x & 1) && in(a | Subset{1} << x)) augment = true;
        }
        ok = augment;
      }
    }
    if (!ok) continue;
    std::vector<Subset> members;
    for (Subset s = 0; s < Subset(subsets); ++s) {
      if (in(s)) members.push_back(s);
    }
    out.push_back(members);
  }
  return out;
}

// Deletion and contraction straight from the set definitions, relabeling
// survivors to 0..m-1 in increasing order.
inline std::vector<int> survivor_map(int n, Subset removed) {
  std::vector<int> map(n, -1);
  int next = 0;
  for (int e = 0; e < n; ++e) {
    if (!(removed >> e & 1)) map[e] = next++;
  }
  return map;
}

inline Subset remap(Subset s, const std::vector<int>& map) {
  Subset out = 0;
  for (int e = 0; e < static_cast<int>(map.size()); ++e) {
    if ((s >> e & 1) && map[e] >= 0) out |= Subset{1} << map[e];
  }
  return out;
}

inline CIStructure delete_by_definition(const CIStructure& g, Subset a) {
  int n = g.ground_size();
  auto map = survivor_map(n, a);
  StmtSet out;
  for (auto [i, j, k] : to_set(g)) {
    Subset all = (Subset{1} << i) | (Subset{1} << j) | k;
    if ((all & a) == 0) out.insert(stmt(map[i], map[j], remap(k, map)));
  }
  return from_set(n - std::popcount(a), out);
}

inline CIStructure contract_by_definition(const CIStructure& g, Subset a) {
  int n = g.ground_size();
  auto map = survivor_map(n, a);
  StmtSet out;
  for (auto [i, j, k] : to_set(g)) {
    if ((a >> i & 1) || (a >> j & 1) || (k & a) != a) continue;
    out.insert(stmt(map[i], map[j], remap(k & ~a, map)));
  }
  return from_set(n - std::popcount(a), out);
}

inline CIStructure dual_by_definition(const CIStructure& g) {
  int n = g.ground_size();
  Subset full = (Subset{1} << n) - 1;
  StmtSet out;
  for (auto [i, j, k] : to_set(g)) {
    out.insert(stmt(i, j, full & ~((Subset{1} << i) | (Subset{1} << j) | k)));
  }
  return from_set(n, out);
}

// (SG) and (MCI) quantified naively over every disjoint instantiation.
inline bool semigraphoid_by_definition(const CIStructure& g) {
  int n = g.ground_size();
  StmtSet s = to_set(g);
  auto has = [&](int a, int b, Subset k) { return s.count(stmt(a, b, k)) > 0; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        if (i == j || j == l || i == l) continue;
        for (Subset k = 0; k < (Subset{1} << n); ++k) {
          if ((k >> i & 1) || (k >> j & 1) || (k >> l & 1)) continue;
          if (has(i, j, k) && has(i, l, k | Subset{1} << j) &&
              !(has(i, l, k) && has(i, j, k | Subset{1} << l))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

inline bool mci_by_definition(const CIStructure& g) {
  int n = g.ground_size();
  StmtSet s = to_set(g);
  auto has = [&](int a, int b, Subset k) { return s.count(stmt(a, b, k)) > 0; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        if (i == j || j == l || i == l) continue;
        Subset ijl = (Subset{1} << i) | (Subset{1} << j) | (Subset{1} << l);
        for (Subset k = 0; k < (Subset{1} << n); ++k) {
          if (k & ijl) continue;
          for (Subset big = 0; big < (Subset{1} << n); ++big) {
            if (big & (ijl | k)) continue;
            if (!has(i, j, k) && !has(i, l, (Subset{1} << j) | k | big)) return false;
          }
        }
      }
    }
  }
  return true;
}

// A_m without (12|) and without the full-support statements.
inline CIStructure single_pair_g_family(int m) {
  StmtSet out;
  Subset full = (Subset{1} << m) - 1;
  for (auto [i, j, k] : all_statements(m)) {
    if (i == 0 && j == 1 && k == 0) continue;
    if (((Subset{1} << i) | (Subset{1} << j) | k) == full) continue;
    out.insert({i, j, k});
  }
  return from_set(m, out);
}

// The chirotope product formula applied naively: the first (basis of K,
// completion a) with χ(i, b, a) != 0 decides, 0 if there is none.
inline int naive_chirotope_sigma(const Chirotope& chi, int i, int j, Subset k) {
  int n = chi.ground_size();
  int r = chi.rank();
  auto value = [&](std::vector<int> tuple) { return chi(tuple); };
  // rank via the support of χ: largest subset of S inside some basis
  std::vector<Subset> bases = chi.support();
  auto independent = [&](Subset s) {
    return std::any_of(bases.begin(), bases.end(), [&](Subset b) { return (s & ~b) == 0; });
  };
  int rk = 0;
  for (Subset s = k;; s = (s - 1) & k) {
    if (independent(s)) rk = std::max(rk, std::popcount(s));
    if (s == 0) break;
  }
  Subset outside = ((Subset{1} << n) - 1) & ~(k | (Subset{1} << i) | (Subset{1} << j));
  for (Subset b = k;; b = (b - 1) & k) {
    if (std::popcount(b) == rk && independent(b)) {
      for (Subset a = outside;; a = (a - 1) & outside) {
        if (std::popcount(a) == r - rk - 1) {
          std::vector<int> ti{i}, tj{j};
          for (int e = 0; e < n; ++e) {
            if (b >> e & 1) {
              ti.push_back(e);
              tj.push_back(e);
            }
          }
          for (int e = 0; e < n; ++e) {
            if (a >> e & 1) {
              ti.push_back(e);
              tj.push_back(e);
            }
          }
          if (value(ti) != 0) return -value(ti) * value(tj);
        }
        if (a == 0) break;
      }
    }
    if (b == 0) break;
  }
  return 0;
}

// Columns given as integer rows.
inline VectorConfiguration vectors(std::initializer_list<std::initializer_list<int>> rows) {
  int d = static_cast<int>(rows.size());
  int n = static_cast<int>(rows.begin()->size());
  std::vector<Rational> flat;
  for (const auto& row : rows) {
    for (int x : row) flat.emplace_back(x);
  }
  return VectorConfiguration(RationalMatrix(d, n, std::move(flat)));
}

}  // namespace cimat::oracle

#endif  // CIMAT_TESTS_ORACLES_H_
