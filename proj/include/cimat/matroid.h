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

// Matroids given by rank functions, and their translation to and from
// CI-structures.
//
// A matroid M with rank r defines
//   [[M]] = {(ij|K) : r(iK) + r(jK) = r(ijK) + r(K)}.
// For loopless M the rank is recovered from [[M]] by r(∅) = 0,
// r(singleton) = 1 and
//   r(ijK) = r(iK) + r(jK) - r(K)       if (ij|K) in [[M]]
//   r(ijK) = r(iK) + r(jK) - r(K) - 1   otherwise,
// and the independent sets are the S with A_S ⊆ [[M]].

#ifndef CIMAT_MATROID_H_
#define CIMAT_MATROID_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cimat/ci_structure.h"
#include "cimat/rational.h"
#include "cimat/subset.h"

namespace cimat {

// Integer values on all 2^n subsets, indexed by bit pattern.
class RankFunction {
 public:
  RankFunction(int n, std::vector<int> values);

  int ground_size() const { return n_; }
  int operator()(Subset s) const { return values_[s]; }
  std::span<const int> values() const { return values_; }

  friend bool operator==(const RankFunction&, const RankFunction&) = default;

 private:
  int n_;
  std::vector<int> values_;
};

// A family of subsets of [n], kept sorted and duplicate free.
class SetFamily {
 public:
  SetFamily(int n, std::vector<Subset> members);

  int ground_size() const { return n_; }
  std::span<const Subset> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Subset s) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_;
  std::vector<Subset> members_;
};

// Exact rational values on all 2^n subsets.
class SetFunction {
 public:
  SetFunction(int n, std::vector<Rational> values);
  static SetFunction from_rank(const RankFunction& r);

  int ground_size() const { return n_; }
  const Rational& operator()(Subset s) const { return values_[s]; }
  std::span<const Rational> values() const { return values_; }

  friend SetFunction operator+(const SetFunction& a, const SetFunction& b);
  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  int n_;
  std::vector<Rational> values_;
};

struct RankFailure {
  enum class Kind { kEmptySet, kUnitIncrease, kMonotone, kSubmodular };
  Kind kind;
  Subset a = 0;
  Subset b = 0;  // kSubmodular only
  int element = -1;  // kUnitIncrease / kMonotone: r(A ∪ x) vs r(A)
  std::string detail;
};

// Empty iff r(∅) = 0, r(A) <= r(A ∪ x) <= r(A) + 1 and r is submodular.
// Submodularity is checked in the equivalent local form
// r(Ai) + r(Aj) >= r(Aij) + r(A), reported as the pair (Ai, Aj).
std::vector<RankFailure> validate_matroid(const RankFunction& r);

class Matroid {
 public:
  // Throws AxiomError naming the first failure of validate_matroid.
  explicit Matroid(RankFunction rank);

  // Rank is max |B ∩ S| over the given bases. Throws AxiomError if the bases
  // do not form a matroid.
  static Matroid from_bases(int n, std::span<const Subset> bases);
  // Rank is the size of the largest member inside S. Throws AxiomError if
  // the family is not the independence system of a matroid.
  static Matroid from_independent_sets(const SetFamily& family);

  int ground_size() const { return rank_.ground_size(); }
  int rank() const { return rank_(full_set(ground_size())); }
  int rank(Subset s) const { return rank_(s); }
  const RankFunction& rank_function() const { return rank_; }

  bool is_independent(Subset s) const { return rank_(s) == cardinality(s); }
  // Sorted by bit pattern.
  const std::vector<Subset>& circuits() const { return circuits_; }
  const std::vector<Subset>& bases() const { return bases_; }
  const SetFamily& independent_sets() const { return independent_; }
  std::vector<Subset> cocircuits() const;
  Subset closure(Subset s) const;

  Subset loops() const;
  Subset coloops() const;
  bool is_loopless() const { return loops() == 0; }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.rank_ == b.rank_;
  }

 private:
  RankFunction rank_;
  std::vector<Subset> circuits_;
  std::vector<Subset> bases_;
  SetFamily independent_;
};

// U_{r,n}: rank S -> min(|S|, r). Throws RangeError unless 0 <= r <= n.
Matroid uniform(int rank, int n);

// [[M]]. Throws LoopError if M has a loop.
CIStructure ci_of_matroid(const Matroid& m);

// Rank function recovered from G by the recursion above, evaluating every
// decomposition ijK of every set. Throws AxiomError if G violates SG or MCI,
// ConsistencyError if two decompositions disagree or the result is not a
// loopless matroid rank.
RankFunction rank_from_ci(const CIStructure& g);
inline Matroid matroid_from_ci(const CIStructure& g) {
  return Matroid(rank_from_ci(g));
}

// {S : A_S ⊆ G}, for any G.
SetFamily independent_sets_from_ci(const CIStructure& g);

// Minors and sums on the rank level. Deletion and contraction relabel the
// remaining elements to 1..m in order.
Matroid matroid_delete(const Matroid& m, Subset a);
Matroid matroid_contract(const Matroid& m, Subset a);
Matroid matroid_dual(const Matroid& m);
Matroid matroid_direct_sum(const Matroid& m1, const Matroid& m2);
// Turns every loop into a coloop; [[.]] is unchanged by this.
Matroid normalize_loopless(const Matroid& m);

// Some circuit C has ij ⊆ C ⊆ ijK, and every circuit inside ijK contains
// both or neither of i, j.
bool dependent_via_circuits(const Matroid& m, const CIStatement& s);

// Six characterizations of (ij|K) not in [[M]]; for a matroid they agree.
struct DependenceProfile {
  bool strict_inequality = false;  // r(iK) + r(jK) > r(ijK) + r(K)
  bool rank_pattern = false;       // r(iK) = r(jK) = r(ijK) = r(K) + 1
  bool circuit_condition = false;  // dependent_via_circuits
  bool cocircuit = false;          // ij is a cocircuit of M restricted to ijK
  bool all_bases = false;          // every basis B of K: iB, jB bases of ijK
  bool some_basis = false;         // some basis B of K: iB, jB bases of ijK

  bool consistent() const;
  friend bool operator==(const DependenceProfile&,
                         const DependenceProfile&) = default;
};
DependenceProfile dependence_profile(const Matroid& m, const CIStatement& s);

struct SubmodularFailure {
  Subset a = 0;
  Subset b = 0;
  std::string detail;
};

// Empty iff h(∅) = 0 and h(A) + h(B) >= h(A ∩ B) + h(A ∪ B). The default
// local form checks the pairs (Ai, Aj), which is equivalent; `all_pairs`
// checks every pair instead. A failing h(∅) is reported as (∅, ∅).
std::vector<SubmodularFailure> check_submodular(const SetFunction& h,
                                                bool all_pairs = false);

// [[h]] by exact equality. Throws ValidationError if h is not submodular.
CIStructure semimatroid_of_set_function(const SetFunction& h);

// G_m = A_m \ ({(ij|)} ∪ {(ij|K) : ijK = [m]}), the semimatroid of
// r_{U(1,m)} + r_{U(m-1,m)}. Not a matroid ((12|) and (13|2 4..m) are both
// missing, against MCI), yet every single-element deletion is [[U(1,m-1)]]
// and every contraction [[U(m-2,m-1)]]. Throws RangeError for m < 4 and
// CapacityError above the storage bound.
CIStructure g_family(int m);

// All loopless matroids on [n], 1 <= n <= 5, from downward-closed families
// containing every singleton filtered by the augmentation axiom.
inline constexpr int kMaxMatroidEnumeration = 5;
std::vector<Matroid> enumerate_loopless_matroids(int n);

// True iff M is a direct sum of copies of U_{1,1} and U_{1,2}, i.e. its
// circuits are pairwise disjoint 2-element sets. Throws LoopError on loops.
bool gaussoid_matroid_decision(const Matroid& m);

// Isomorphism of loopless matroids through their CI-structures.
std::optional<Permutation> matroid_isomorphic(const Matroid& a,
                                              const Matroid& b);

}  // namespace cimat

#endif  // CIMAT_MATROID_H_
