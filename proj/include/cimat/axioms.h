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

// Axiom checkers for unoriented CI-structures.
//
// Every schema is quantified over all tuples of pairwise distinct singletons
// and pairwise disjoint sets for which the statements are well formed.
//
//   SG    (ij|K) ∧ (il|jK)  =>  (il|K) ∧ (ij|lK)
//   MCI   not (ij|K)        =>  (il|jKL)
//   Int   (ij|kL) ∧ (ik|jL) =>  (ij|L) ∧ (ik|L)
//   Comp  (ij|L) ∧ (ik|L)   =>  (ij|kL) ∧ (ik|jL)
//   WT    (ij|L) ∧ (ij|kL)  =>  (ik|L) ∨ (jk|L)
//
// Checkers return every violating instantiation; the satisfies_* variants
// stop at the first one.

#ifndef CIMAT_AXIOMS_H_
#define CIMAT_AXIOMS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cimat/ci_structure.h"

namespace cimat {

enum class Axiom {
  kSemigraphoid,
  kMci,
  kIntersection,
  kComposition,
  kWeakTransitivity,
  kOci1,
  kOci2,
  kOci3,
  kOci4,
  kOci5,
};

// "SG", "MCI", "Int", "Comp", "WT", "OCI1".."OCI5".
std::string_view axiom_name(Axiom a);

struct ViolationWitness {
  Axiom axiom;
  // The singletons in schema order, 0-based: (i, j, l) or (i, j, k); OCI3
  // carries only (i, j).
  std::vector<int> elements;
  // The set variables in schema order. For Int/Comp/WT the single set L of
  // the schema is stored in `k` and `l` is empty. For OCI3, `k` is the
  // nonzero statement's conditioning set and `l` the comparable one.
  Subset k = 0;
  Subset l = 0;
  std::string detail;
  // StatementIndex of the (first) failing conclusion; used for ordering.
  std::size_t conclusion = 0;

  friend bool operator==(const ViolationWitness&,
                         const ViolationWitness&) = default;
};

// "AXIOM i j l | K ; L" with 1-based labels, e.g. "MCI 1 2 3 | ; 4".
std::string format_witness(const ViolationWitness& w);

std::vector<ViolationWitness> check_semigraphoid(const CIStructure& g);
std::vector<ViolationWitness> check_mci(const CIStructure& g);
// Int, Comp, WT and SG together.
std::vector<ViolationWitness> check_gaussoid(const CIStructure& g);

bool satisfies_semigraphoid(const CIStructure& g);
bool satisfies_mci(const CIStructure& g);
// SG and MCI: G is [[M]] for a (unique) loopless matroid M.
bool is_matroid_ci(const CIStructure& g);
bool is_gaussoid(const CIStructure& g);

// Re-evaluates the schema instance named by `w` against `g`; true iff the
// premise holds and the conclusion fails. Unoriented axioms only.
bool reproduces(const ViolationWitness& w, const CIStructure& g);

// SG and MCI compiled to membership-bit tests for ground sets with at most
// 64 statements (n <= 4), for scanning every CI-structure on [n].
class CompiledMatroidRules {
 public:
  explicit CompiledMatroidRules(int n);
  bool holds(std::uint64_t members) const;

 private:
  // MCI clauses: bit a or bit b must be a member.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> disjunctions_;
  // SG: if premise ⊆ members then conclusion ⊆ members.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> implications_;
};

// Every CI-structure on [n] satisfying SG and MCI, in increasing order of
// membership word. Exhaustive over 2^|A_n| candidates; n <= 4.
// `workers` = 0 picks std::thread::hardware_concurrency().
inline constexpr int kMaxMatroidCiScan = 4;
std::vector<CIStructure> enumerate_matroid_ci(int n, unsigned workers = 0);

}  // namespace cimat

#endif  // CIMAT_AXIOMS_H_
