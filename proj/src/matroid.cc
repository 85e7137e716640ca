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

#include "cimat/matroid.h"

#include <algorithm>
#include <numeric>

#include "cimat/axioms.h"
#include "cimat/errors.h"

namespace cimat {
namespace {

void check_table(int n, std::size_t size) {
  if (n < 0 || n > kMaxGroundSize) {
    throw CapacityError("ground set size " + std::to_string(n) +
                        " outside 0.." + std::to_string(kMaxGroundSize));
  }
  if (size != (std::size_t{1} << n)) {
    throw RangeError("set function table needs 2^n = " +
                     std::to_string(std::size_t{1} << n) + " values, got " +
                     std::to_string(size));
  }
}

std::string kind_name(RankFailure::Kind k) {
  switch (k) {
    case RankFailure::Kind::kEmptySet: return "r(empty) != 0";
    case RankFailure::Kind::kUnitIncrease: return "unit increase";
    case RankFailure::Kind::kMonotone: return "monotonicity";
    case RankFailure::Kind::kSubmodular: return "submodularity";
  }
  return "?";
}

// Rank of every subset from an independence oracle over bit patterns.
std::vector<int> rank_from_independence(int n, const std::vector<bool>& indep) {
  std::vector<int> r(std::size_t{1} << n, 0);
  for (Subset s = 1; s < r.size(); ++s) {
    if (indep[s]) {
      r[s] = cardinality(s);
      continue;
    }
    int best = 0;
    for (int e : elements_of(s)) best = std::max(best, r[s & ~bit(e)]);
    r[s] = best;
  }
  return r;
}

// D ⊆ T is a cocircuit of M|T: removing D drops the rank, removing any
// proper part of it does not.
bool is_cocircuit_in(const Matroid& m, Subset d, Subset t) {
  if (d == 0 || !is_subset(d, t)) return false;
  int full = m.rank(t);
  if (m.rank(t & ~d) >= full) return false;
  for (int x : elements_of(d)) {
    if (m.rank(t & ~(d & ~bit(x))) != full) return false;
  }
  return true;
}

// Maximal independent subsets of S.
std::vector<Subset> bases_of(const Matroid& m, Subset s) {
  std::vector<Subset> out;
  int target = m.rank(s);
  for_each_subset(s, [&](Subset b) {
    if (cardinality(b) == target && m.is_independent(b)) out.push_back(b);
  });
  return out;
}

}  // namespace

RankFunction::RankFunction(int n, std::vector<int> values)
    : n_(n), values_(std::move(values)) {
  check_table(n, values_.size());
}

SetFamily::SetFamily(int n, std::vector<Subset> members)
    : n_(n), members_(std::move(members)) {
  if (n < 0 || n > kMaxGroundSize) throw CapacityError("ground set too large");
  for (Subset s : members_) {
    if (!is_subset(s, full_set(n))) {
      throw RangeError("family member " + brace_subset(s) + " outside [n]");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(Subset s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

SetFunction::SetFunction(int n, std::vector<Rational> values)
    : n_(n), values_(std::move(values)) {
  check_table(n, values_.size());
}

SetFunction SetFunction::from_rank(const RankFunction& r) {
  std::vector<Rational> v(r.values().begin(), r.values().end());
  return SetFunction(r.ground_size(), std::move(v));
}

SetFunction operator+(const SetFunction& a, const SetFunction& b) {
  if (a.n_ != b.n_) throw RangeError("set functions on different ground sets");
  std::vector<Rational> v(a.values_.size());
  for (std::size_t s = 0; s < v.size(); ++s) v[s] = a.values_[s] + b.values_[s];
  return SetFunction(a.n_, std::move(v));
}

std::vector<RankFailure> validate_matroid(const RankFunction& r) {
  std::vector<RankFailure> out;
  int n = r.ground_size();
  Subset all = full_set(n);
  if (r(0) != 0) {
    out.push_back({RankFailure::Kind::kEmptySet, 0, 0, -1,
                   "r(" + brace_subset(0) + ") = " + std::to_string(r(0))});
  }
  for (Subset a = 0; a <= all; ++a) {
    for (int x = 0; x < n; ++x) {
      if (contains(a, x)) continue;
      int lo = r(a);
      int hi = r(a | bit(x));
      if (hi < lo) {
        out.push_back({RankFailure::Kind::kMonotone, a, 0, x,
                       "r(" + brace_subset(a | bit(x)) + ") < r(" +
                           brace_subset(a) + ")"});
      } else if (hi > lo + 1) {
        out.push_back({RankFailure::Kind::kUnitIncrease, a, 0, x,
                       "r(" + brace_subset(a | bit(x)) + ") > r(" +
                           brace_subset(a) + ") + 1"});
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (contains(a, i) || contains(a, j)) continue;
        Subset ai = a | bit(i);
        Subset aj = a | bit(j);
        if (r(ai) + r(aj) < r(ai | aj) + r(a)) {
          out.push_back({RankFailure::Kind::kSubmodular, ai, aj, -1,
                         "r(" + brace_subset(ai) + ") + r(" + brace_subset(aj) +
                             ") < r(" + brace_subset(ai | aj) + ") + r(" +
                             brace_subset(a) + ")"});
        }
      }
    }
    if (a == all) break;
  }
  return out;
}

Matroid::Matroid(RankFunction rank)
    : rank_(std::move(rank)), independent_(rank_.ground_size(), {}) {
  auto failures = validate_matroid(rank_);
  if (!failures.empty()) {
    throw AxiomError("not a matroid rank function (" +
                     kind_name(failures.front().kind) +
                     "): " + failures.front().detail);
  }
  int n = ground_size();
  Subset all = full_set(n);
  int top = rank_(all);
  std::vector<Subset> indep;
  for (Subset s = 0; s <= all; ++s) {
    if (is_independent(s)) {
      indep.push_back(s);
      if (cardinality(s) == top) bases_.push_back(s);
    } else {
      std::vector<int> elems = elements_of(s);
      bool minimal = std::all_of(elems.begin(), elems.end(), [&](int e) {
        return is_independent(s & ~bit(e));
      });
      if (minimal) circuits_.push_back(s);
    }
    if (s == all) break;
  }
  independent_ = SetFamily(n, std::move(indep));
}

Matroid Matroid::from_bases(int n, std::span<const Subset> bases) {
  if (bases.empty()) throw AxiomError("a matroid needs at least one basis");
  std::vector<int> r(std::size_t{1} << n, 0);
  for (Subset s = 0; s < r.size(); ++s) {
    for (Subset b : bases) r[s] = std::max(r[s], cardinality(s & b));
  }
  Matroid m(RankFunction(n, std::move(r)));
  std::vector<Subset> given(bases.begin(), bases.end());
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (given != m.bases()) {
    throw AxiomError("basis family fails the exchange property");
  }
  return m;
}

Matroid Matroid::from_independent_sets(const SetFamily& family) {
  int n = family.ground_size();
  std::vector<bool> indep(std::size_t{1} << n, false);
  for (Subset s : family.members()) indep[s] = true;
  Matroid m(RankFunction(n, rank_from_independence(n, indep)));
  if (!(m.independent_sets() == family)) {
    throw AxiomError("set family is not the independence system of a matroid");
  }
  return m;
}

std::vector<Subset> Matroid::cocircuits() const {
  return matroid_dual(*this).circuits();
}

Subset Matroid::closure(Subset s) const {
  Subset out = s;
  int base = rank_(s);
  for (int x = 0; x < ground_size(); ++x) {
    if (rank_(s | bit(x)) == base) out |= bit(x);
  }
  return out;
}

Subset Matroid::loops() const {
  Subset out = 0;
  for (int x = 0; x < ground_size(); ++x) {
    if (rank_(bit(x)) == 0) out |= bit(x);
  }
  return out;
}

Subset Matroid::coloops() const {
  Subset all = full_set(ground_size());
  Subset out = 0;
  for (int x = 0; x < ground_size(); ++x) {
    if (rank_(all & ~bit(x)) < rank()) out |= bit(x);
  }
  return out;
}

Matroid uniform(int rank, int n) {
  if (n < 0 || n > kMaxGroundSize || rank < 0 || rank > n) {
    throw RangeError("uniform matroid needs 0 <= r <= n <= 16, got r=" +
                     std::to_string(rank) + " n=" + std::to_string(n));
  }
  std::vector<int> r(std::size_t{1} << n);
  for (Subset s = 0; s < r.size(); ++s) r[s] = std::min(cardinality(s), rank);
  return Matroid(RankFunction(n, std::move(r)));
}

CIStructure ci_of_matroid(const Matroid& m) {
  Subset loops = m.loops();
  if (loops != 0) {
    int e = lowest_element(loops);
    throw LoopError(e + 1, "matroid has a loop at element " + std::to_string(e + 1));
  }
  CIStructure g(m.ground_size());
  const StatementIndex& idx = g.index();
  for (std::size_t s = 0; s < idx.size(); ++s) {
    CIStatement st = idx.statement(s);
    Subset i = bit(st.i), j = bit(st.j);
    if (m.rank(i | st.k) + m.rank(j | st.k) == m.rank(i | j | st.k) + m.rank(st.k)) {
      g.set_index(s, true);
    }
  }
  return g;
}

RankFunction rank_from_ci(const CIStructure& g) {
  if (auto w = check_semigraphoid(g); !w.empty()) {
    throw AxiomError("CI-structure violates SG: " + format_witness(w.front()));
  }
  if (auto w = check_mci(g); !w.empty()) {
    throw AxiomError("CI-structure violates MCI: " + format_witness(w.front()));
  }
  int n = g.ground_size();
  std::vector<Subset> order(std::size_t{1} << n);
  std::iota(order.begin(), order.end(), Subset{0});
  std::stable_sort(order.begin(), order.end(), [](Subset a, Subset b) {
    return cardinality(a) < cardinality(b);
  });
  std::vector<int> r(order.size(), 0);
  for (Subset s : order) {
    int c = cardinality(s);
    if (c <= 1) {
      r[s] = c;
      continue;
    }
    std::vector<int> elems = elements_of(s);
    bool first = true;
    for (std::size_t a = 0; a < elems.size(); ++a) {
      for (std::size_t b = a + 1; b < elems.size(); ++b) {
        int i = elems[a], j = elems[b];
        Subset k = s & ~(bit(i) | bit(j));
        int value = r[bit(i) | k] + r[bit(j) | k] - r[k] -
                    (g.contains(i, j, k) ? 0 : 1);
        if (first) {
          r[s] = value;
          first = false;
        } else if (value != r[s]) {
          throw ConsistencyError(
              "rank recursion disagrees on " + brace_subset(s) + ": " +
              std::to_string(r[s]) + " vs " + std::to_string(value) + " via " +
              to_string(CIStatement::make(i, j, k)));
        }
      }
    }
  }
  RankFunction out(n, std::move(r));
  if (auto f = validate_matroid(out); !f.empty()) {
    throw ConsistencyError("recovered rank is not a matroid rank: " +
                           f.front().detail);
  }
  return out;
}

SetFamily independent_sets_from_ci(const CIStructure& g) {
  int n = g.ground_size();
  Subset all = full_set(n);
  std::vector<Subset> members;
  for (Subset s = 0; s <= all; ++s) {
    bool ok = true;
    std::vector<int> elems = elements_of(s);
    for (std::size_t a = 0; a < elems.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < elems.size() && ok; ++b) {
        Subset rest = s & ~(bit(elems[a]) | bit(elems[b]));
        for_each_subset(rest, [&](Subset k) {
          if (ok && !g.contains(elems[a], elems[b], k)) ok = false;
        });
      }
    }
    if (ok) members.push_back(s);
    if (s == all) break;
  }
  return SetFamily(n, std::move(members));
}

Matroid matroid_delete(const Matroid& m, Subset a) {
  int n = m.ground_size();
  if (!is_subset(a, full_set(n))) throw RangeError("deleted set outside [n]");
  Subset kept = full_set(n) & ~a;
  int k = cardinality(kept);
  std::vector<int> r(std::size_t{1} << k);
  for (Subset s = 0; s < r.size(); ++s) r[s] = m.rank(expand(s, kept));
  return Matroid(RankFunction(k, std::move(r)));
}

Matroid matroid_contract(const Matroid& m, Subset a) {
  int n = m.ground_size();
  if (!is_subset(a, full_set(n))) throw RangeError("contracted set outside [n]");
  Subset kept = full_set(n) & ~a;
  int k = cardinality(kept);
  int ra = m.rank(a);
  std::vector<int> r(std::size_t{1} << k);
  for (Subset s = 0; s < r.size(); ++s) r[s] = m.rank(expand(s, kept) | a) - ra;
  return Matroid(RankFunction(k, std::move(r)));
}

Matroid matroid_dual(const Matroid& m) {
  int n = m.ground_size();
  Subset all = full_set(n);
  std::vector<int> r(std::size_t{1} << n);
  for (Subset s = 0; s < r.size(); ++s) {
    r[s] = cardinality(s) + m.rank(all & ~s) - m.rank();
  }
  return Matroid(RankFunction(n, std::move(r)));
}

Matroid matroid_direct_sum(const Matroid& m1, const Matroid& m2) {
  int n1 = m1.ground_size();
  int n = n1 + m2.ground_size();
  if (n > kMaxGroundSize) throw CapacityError("direct sum exceeds ground set bound");
  std::vector<int> r(std::size_t{1} << n);
  for (Subset s = 0; s < r.size(); ++s) {
    r[s] = m1.rank(s & full_set(n1)) + m2.rank(s >> n1);
  }
  return Matroid(RankFunction(n, std::move(r)));
}

Matroid normalize_loopless(const Matroid& m) {
  Subset loops = m.loops();
  if (loops == 0) return m;
  std::vector<int> r(std::size_t{1} << m.ground_size());
  for (Subset s = 0; s < r.size(); ++s) {
    r[s] = m.rank(s & ~loops) + cardinality(s & loops);
  }
  return Matroid(RankFunction(m.ground_size(), std::move(r)));
}

bool dependent_via_circuits(const Matroid& m, const CIStatement& s) {
  Subset ij = bit(s.i) | bit(s.j);
  Subset t = s.support();
  bool spanning = false;
  for (Subset c : m.circuits()) {
    if (!is_subset(c, t)) continue;
    Subset meet = c & ij;
    if (meet == ij) {
      spanning = true;
    } else if (meet != 0) {
      return false;
    }
  }
  return spanning;
}

bool DependenceProfile::consistent() const {
  bool v = strict_inequality;
  return rank_pattern == v && circuit_condition == v && cocircuit == v &&
         all_bases == v && some_basis == v;
}

DependenceProfile dependence_profile(const Matroid& m, const CIStatement& s) {
  Subset i = bit(s.i), j = bit(s.j), k = s.k;
  Subset t = i | j | k;
  DependenceProfile p;
  int rik = m.rank(i | k), rjk = m.rank(j | k), rt = m.rank(t), rk = m.rank(k);
  p.strict_inequality = rik + rjk > rt + rk;
  p.rank_pattern = rik == rjk && rjk == rt && rt == rk + 1;
  p.circuit_condition = dependent_via_circuits(m, s);
  p.cocircuit = is_cocircuit_in(m, i | j, t);
  auto extends = [&](Subset b) {
    int target = cardinality(b) + 1;
    return target == rt && m.is_independent(i | b) && m.is_independent(j | b);
  };
  std::vector<Subset> bk = bases_of(m, k);
  p.all_bases = std::all_of(bk.begin(), bk.end(), extends);
  p.some_basis = std::any_of(bk.begin(), bk.end(), extends);
  return p;
}

std::vector<SubmodularFailure> check_submodular(const SetFunction& h,
                                                bool all_pairs) {
  std::vector<SubmodularFailure> out;
  int n = h.ground_size();
  Subset all = full_set(n);
  if (h(0) != 0) {
    out.push_back({0, 0, "h(" + brace_subset(0) + ") = " + format_rational(h(0))});
  }
  auto test = [&](Subset a, Subset b) {
    if (h(a) + h(b) < h(a & b) + h(a | b)) {
      out.push_back({a, b,
                     "h(" + brace_subset(a) + ") + h(" + brace_subset(b) +
                         ") < h(" + brace_subset(a & b) + ") + h(" +
                         brace_subset(a | b) + ")"});
    }
  };
  for (Subset a = 0; a <= all; ++a) {
    if (all_pairs) {
      for (Subset b = a + 1; b <= all; ++b) test(a, b);
    } else {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (!contains(a, i) && !contains(a, j)) test(a | bit(i), a | bit(j));
        }
      }
    }
    if (a == all) break;
  }
  return out;
}

CIStructure semimatroid_of_set_function(const SetFunction& h) {
  if (auto f = check_submodular(h); !f.empty()) {
    throw ValidationError("set function is not submodular: " + f.front().detail);
  }
  CIStructure g(h.ground_size());
  const StatementIndex& idx = g.index();
  for (std::size_t s = 0; s < idx.size(); ++s) {
    CIStatement st = idx.statement(s);
    Subset i = bit(st.i), j = bit(st.j);
    if (h(i | st.k) + h(j | st.k) == h(i | j | st.k) + h(st.k)) g.set_index(s, true);
  }
  return g;
}

CIStructure g_family(int m) {
  if (m < 4) throw RangeError("g_family needs m >= 4, got " + std::to_string(m));
  if (m > kMaxGroundSize) throw CapacityError("g_family limited to m <= 16");
  // Every unconditional statement goes, not only (12|): with (13|) and
  // (12|3) kept, (12|) alone missing would already break SG.
  CIStructure g = CIStructure::full(m);
  Subset all = full_set(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      g.erase(CIStatement::make(i, j, 0));
      g.erase(CIStatement::make(i, j, all & ~(bit(i) | bit(j))));
    }
  }
  return g;
}

bool gaussoid_matroid_decision(const Matroid& m) {
  Subset loops = m.loops();
  if (loops != 0) {
    int e = lowest_element(loops);
    throw LoopError(e + 1, "matroid has a loop at element " + std::to_string(e + 1));
  }
  Subset seen = 0;
  for (Subset c : m.circuits()) {
    if (cardinality(c) != 2 || (c & seen) != 0) return false;
    seen |= c;
  }
  return true;
}

std::optional<Permutation> matroid_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.ground_size() != b.ground_size() || a.rank() != b.rank()) return std::nullopt;
  return isomorphic(ci_of_matroid(a), ci_of_matroid(b));
}

}  // namespace cimat
