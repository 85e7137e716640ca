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

// Ground sets, CI-statements (ij|K), and CI-structures stored as dense
// membership tables, together with the structural operations: deletion,
// contraction, duality, direct sum, minors and isomorphism.

#ifndef CIMAT_CI_STRUCTURE_H_
#define CIMAT_CI_STRUCTURE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cimat/subset.h"

namespace cimat {

// The ground set [n] with 1 <= n <= kMaxGroundSize.
class GroundSet {
 public:
  explicit GroundSet(int n);
  int size() const { return n_; }
  Subset elements() const { return full_set(n_); }
  friend bool operator==(GroundSet, GroundSet) = default;

 private:
  int n_;
};

// The statement (ij|K). Stored canonically with i < j, 0-based elements.
struct CIStatement {
  int i = 0;
  int j = 1;
  Subset k = 0;

  // Orders the pair and checks i != j and K ∩ {i,j} = ∅.
  static CIStatement make(int a, int b, Subset k);

  // i, j and K together.
  Subset support() const { return bit(i) | bit(j) | k; }

  friend bool operator==(const CIStatement&, const CIStatement&) = default;
};

// "(12|34)" style rendering with 1-based labels; multi-digit labels are
// comma separated.
std::string to_string(const CIStatement& s);

// |A_n| = C(n,2) * 2^(n-2). Throws CapacityError unless 2 <= n <= 16.
std::uint64_t statement_count(int n);

// Dense ranking of A_n: pairs (i,j) lexicographic, then K read as an
// (n-2)-bit integer over [n] \ {i,j} in increasing element order.
class StatementIndex {
 public:
  explicit StatementIndex(int n);

  int ground_size() const { return n_; }
  std::size_t size() const { return size_; }

  std::size_t index(const CIStatement& s) const;
  std::size_t index(int i, int j, Subset k) const {
    return index(CIStatement::make(i, j, k));
  }
  CIStatement statement(std::size_t idx) const;

 private:
  int n_;
  std::size_t size_;
  std::vector<std::size_t> pair_offset_;  // n*n, only i<j entries used
};

// A subset of A_n. Members are kept in a bit table in StatementIndex order.
class CIStructure {
 public:
  // The empty structure on [n], 0 <= n <= 16. Ground sets of size 0 and 1
  // arise from deletion and direct sums and carry no statements.
  explicit CIStructure(int n);

  static CIStructure full(int n);
  static CIStructure from_statements(int n,
                                     std::span<const CIStatement> members);
  // Adopts a raw membership table (bit b of words[b/64] is statement b).
  // Bits past statement_count are cleared.
  static CIStructure from_words(int n, std::vector<std::uint64_t> words);

  int ground_size() const { return n_; }
  std::size_t statement_count() const { return size_; }
  const StatementIndex& index() const { return *index_; }

  bool contains(const CIStatement& s) const {
    return contains_index(index_->index(s));
  }
  bool contains(int i, int j, Subset k) const {
    return contains(CIStatement::make(i, j, k));
  }
  bool contains_index(std::size_t idx) const {
    return (words_[idx >> 6] >> (idx & 63)) & 1U;
  }

  void insert(const CIStatement& s) { set_index(index_->index(s), true); }
  void erase(const CIStatement& s) { set_index(index_->index(s), false); }
  void set_index(std::size_t idx, bool member);

  std::size_t member_count() const;
  bool empty() const { return member_count() == 0; }
  // Members in canonical order.
  std::vector<CIStatement> statements() const;
  std::span<const std::uint64_t> words() const { return words_; }

  // Complement within A_n.
  CIStructure complement() const;

  friend bool operator==(const CIStructure& a, const CIStructure& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  int n_;
  std::size_t size_;
  std::shared_ptr<const StatementIndex> index_;
  std::vector<std::uint64_t> words_;
};

// Shared per-n index (thread-safe lazy construction).
std::shared_ptr<const StatementIndex> statement_index(int n);

// Result of deletion/contraction: the structure on the m = n - |A| remaining
// elements relabeled 1..m in order, and original[e] = old 0-based label of
// new element e.
struct ReducedStructure {
  CIStructure structure;
  std::vector<int> original;
};

// G \ A = {(ij|K) in G : ijK ⊆ [n] \ A}. A may be all of [n], leaving the
// structure on the empty ground set.
ReducedStructure deletion(const CIStructure& g, Subset a);
// G / A = {(ij|K) in A_{[n]\A} : (ij|KA) in G}.
ReducedStructure contraction(const CIStructure& g, Subset a);
// G* = {(ij|[n] \ ijK) : (ij|K) in G}.
CIStructure dual(const CIStructure& g);
// G1 ⊕ G2 on [n1 + n2], G2's elements placed after G1's.
CIStructure direct_sum(const CIStructure& g1, const CIStructure& g2);

struct Minor {
  CIStructure structure;
  Subset deleted = 0;
  Subset contracted = 0;
  bool proper = false;  // deleted ∪ contracted ≠ ∅
};

inline constexpr int kMaxMinorsGround = 10;
// (G \ A) / B for every disjoint pair A, B; 3^n entries, ordered by A then B.
// Throws CapacityError for n > 10.
std::vector<Minor> minors(const CIStructure& g);
// The single minor with A deleted and B contracted (A ∩ B = ∅).
CIStructure minor(const CIStructure& g, Subset deleted, Subset contracted);

// perm[e] is the image of element e (0-based).
using Permutation = std::vector<int>;

// π(G) = {(π(i)π(j)|π(K)) : (ij|K) in G}.
CIStructure relabel(const CIStructure& g, const Permutation& perm);
Subset relabel(Subset s, const Permutation& perm);

inline constexpr int kMaxIsomorphismGround = 10;
// Some π with π(G1) = G2, or nullopt. Brute force over all n! permutations
// after comparing the per-|K| statement counts. Throws CapacityError for
// n > 10 and RangeError when the ground sizes differ.
std::optional<Permutation> isomorphic(const CIStructure& g1,
                                      const CIStructure& g2);

// Members per conditioning-set size; permutation invariant.
std::vector<std::size_t> conditioning_profile(const CIStructure& g);

}  // namespace cimat

#endif  // CIMAT_CI_STRUCTURE_H_
