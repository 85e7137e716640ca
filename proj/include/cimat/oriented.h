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

// Oriented matroids as signed circuits, oriented CI-structures
// σ: A_n -> {-1, 0, +1}, and chirotopes.
//
// The oriented CI-structure of an oriented matroid sets σ(ij|K) = 0 on
// [[underlying matroid]] and σ(ij|K) = X(i)X(j) otherwise, for any signed
// circuit X with ij ⊆ supp(X) ⊆ ijK. Conversely σ satisfying OCI1..OCI5
// determines the oriented matroid: the underlying matroid comes from
// σ^{-1}(0) and each circuit C receives, for any c0 in C,
//   ±({c0} ∪ {c : σ(c c0 | C \ c c0) = +1}, {c : σ(c c0 | C \ c c0) = -1}).

#ifndef CIMAT_ORIENTED_H_
#define CIMAT_ORIENTED_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cimat/axioms.h"
#include "cimat/ci_structure.h"
#include "cimat/matroid.h"
#include "cimat/subset.h"

namespace cimat {

struct SignedSet {
  Subset positive = 0;
  Subset negative = 0;

  // Throws RangeError if the parts overlap.
  static SignedSet make(Subset positive, Subset negative);

  Subset support() const { return positive | negative; }
  int operator()(int e) const {
    return contains(positive, e) ? 1 : (contains(negative, e) ? -1 : 0);
  }
  SignedSet operator-() const { return {negative, positive}; }
  // The member of {X, -X} whose smallest support element is positive.
  SignedSet canonical() const;

  friend auto operator<=>(const SignedSet&, const SignedSet&) = default;
};

// "+ 1 2 - 3" with 1-based labels (either part may be absent).
std::string format_signed_set(const SignedSet& x);

// A set of signed subsets of [n], sorted and duplicate free. Holds both X
// and -X; negations are not added implicitly.
class SignedCircuitSet {
 public:
  SignedCircuitSet(int n, std::vector<SignedSet> circuits);
  // Adds -X for every given X.
  static SignedCircuitSet symmetric(int n, std::span<const SignedSet> reps);

  int ground_size() const { return n_; }
  std::span<const SignedSet> circuits() const { return circuits_; }
  bool contains(const SignedSet& x) const;
  // One canonical member per ± pair, sorted.
  std::vector<SignedSet> representatives() const;

  friend bool operator==(const SignedCircuitSet&,
                         const SignedCircuitSet&) = default;

 private:
  int n_;
  std::vector<SignedSet> circuits_;
};

struct CircuitAxiomFailure {
  // "OC0", "OC1", "OC2", "OC3", "OC3'", or "internal" when OC3 and OC3'
  // disagree on input satisfying OC0..OC2.
  std::string axiom;
  SignedSet x;
  SignedSet y;
  int e = -1;
  int f = -1;
  std::string detail;
};

enum class EliminationMode {
  // Every pair X, Y.
  kAllPairs,
  // Only pairs whose supports are a modular pair in the matroid formed by
  // the supports. Sufficient when OC0..OC2 hold.
  kModularPairs,
};

// Empty iff OC0..OC3 hold. OC3' is evaluated as a second pass and any
// disagreement with OC3 (given OC0..OC2) is reported as "internal".
std::vector<CircuitAxiomFailure> check_circuit_axioms(
    const SignedCircuitSet& c,
    EliminationMode mode = EliminationMode::kAllPairs);

// The matroid whose circuits are the supports. Throws AxiomError if the
// circuit axioms fail.
Matroid underlying_matroid(const SignedCircuitSet& c);

// σ stored as two disjoint membership tables.
class OrientedCIStructure {
 public:
  explicit OrientedCIStructure(int n);
  OrientedCIStructure(CIStructure plus, CIStructure minus);

  int ground_size() const { return plus_.ground_size(); }
  const StatementIndex& index() const { return plus_.index(); }

  int sign(const CIStatement& s) const { return sign_index(index().index(s)); }
  int sign(int i, int j, Subset k) const {
    return sign(CIStatement::make(i, j, k));
  }
  int sign_index(std::size_t idx) const {
    return plus_.contains_index(idx) ? 1 : (minus_.contains_index(idx) ? -1 : 0);
  }
  void set(const CIStatement& s, int sign);

  const CIStructure& plus() const { return plus_; }
  const CIStructure& minus() const { return minus_; }
  // σ^{-1}(0).
  CIStructure zero_set() const;

  friend bool operator==(const OrientedCIStructure&,
                         const OrientedCIStructure&) = default;

 private:
  CIStructure plus_;
  CIStructure minus_;
};

// Throws LoopError if a circuit has size 1, AxiomError if the circuit
// axioms fail, ConsistencyError if two circuit witnesses disagree on a sign
// or a dependent statement has no witness.
OrientedCIStructure sigma_of_oriented_matroid(const SignedCircuitSet& c);

// All failures of OCI1..OCI5 over disjoint instantiations. Witness
// elements are (i, j, l) for OCI1/2/4/5 and (i, j) for OCI3; OCI1 uses both
// sets (K, L), OCI3 stores the nonzero statement's set in k and the
// comparable set in l.
std::vector<ViolationWitness> check_oci(const OrientedCIStructure& sigma);
bool reproduces(const ViolationWitness& w, const OrientedCIStructure& sigma);

// Recovers the signed circuits from σ. Evaluates every choice of c0 and
// checks they agree up to sign, that the result satisfies the circuit
// axioms, and that it maps back to σ. Throws AxiomError if σ violates OCI
// or σ^{-1}(0) is not a matroid CI-structure, ConsistencyError if any check
// fails.
SignedCircuitSet oriented_matroid_from_sigma(const OrientedCIStructure& sigma);

// Alternating sign map on r-tuples, stored on sorted r-subsets.
class Chirotope {
 public:
  // signs[s] for every subset s; entries off r-subsets must be 0.
  Chirotope(int n, int rank, std::vector<signed char> signs);

  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  // Value on a sorted r-subset.
  int sign(Subset sorted_tuple) const { return signs_[sorted_tuple]; }
  void set(Subset sorted_tuple, int sign);
  // Value on an arbitrary r-tuple: 0 on repeats, sign of the sorting
  // permutation times the sorted value otherwise.
  int operator()(std::span<const int> tuple) const;
  // Sorted r-subsets with nonzero sign.
  std::vector<Subset> support() const;
  Chirotope operator-() const;

  friend bool operator==(const Chirotope&, const Chirotope&) = default;

 private:
  int n_;
  int rank_;
  std::vector<signed char> signs_;
};

// Empty iff χ is not identically zero and its support satisfies basis
// exchange. Necessary, not sufficient, for χ to be a chirotope.
std::vector<std::string> chirotope_validate(const Chirotope& chi);

// Matroid whose bases are the support. Throws ValidationError on invalid χ.
Matroid chirotope_matroid(const Chirotope& chi);

// σ from χ. Zero statements are decided by the underlying matroid; for
// dependent (ij|K), σ = -χ(i,b,a)χ(j,b,a) with b a basis of K and a ⊆
// [n] \ ijK such that χ(i,b,a) != 0. All such b and a are evaluated and must
// agree (ConsistencyError otherwise). Throws ValidationError on invalid χ and
// LoopError when the underlying matroid has loops.
OrientedCIStructure sigma_from_chirotope(const Chirotope& chi);

}  // namespace cimat

#endif  // CIMAT_ORIENTED_H_
