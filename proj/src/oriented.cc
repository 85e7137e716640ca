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

#include "cimat/oriented.h"

#include <algorithm>
#include <optional>
#include <tuple>

#include "cimat/errors.h"

namespace cimat {
namespace {

std::string sign_text(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

// Z with Z+ ⊆ (X+ ∪ Y+) \ e and Z- ⊆ (X- ∪ Y-) \ e, optionally with f in
// its support.
bool has_eliminant(const SignedCircuitSet& c, const SignedSet& x,
                   const SignedSet& y, int e, int f) {
  Subset pos = (x.positive | y.positive) & ~bit(e);
  Subset neg = (x.negative | y.negative) & ~bit(e);
  for (const SignedSet& z : c.circuits()) {
    if (!is_subset(z.positive, pos) || !is_subset(z.negative, neg)) continue;
    if (f >= 0 && !contains(z.support(), f)) continue;
    return true;
  }
  return false;
}

// Rank of the independence system "contains no support".
std::vector<int> support_rank(const SignedCircuitSet& c) {
  int n = c.ground_size();
  std::vector<Subset> supports;
  for (const SignedSet& x : c.circuits()) supports.push_back(x.support());
  std::vector<int> r(std::size_t{1} << n, 0);
  for (Subset s = 1; s < r.size(); ++s) {
    bool indep = std::none_of(supports.begin(), supports.end(),
                              [&](Subset sup) { return is_subset(sup, s); });
    if (indep) {
      r[s] = cardinality(s);
    } else {
      for (int e : elements_of(s)) r[s] = std::max(r[s], r[s & ~bit(e)]);
    }
  }
  return r;
}

// Supports are exactly the circuits of a matroid.
bool supports_form_matroid(const SignedCircuitSet& c, const std::vector<int>& r) {
  if (!validate_matroid(RankFunction(c.ground_size(), r)).empty()) return false;
  Matroid m{RankFunction(c.ground_size(), r)};
  std::vector<Subset> supports;
  for (const SignedSet& x : c.circuits()) supports.push_back(x.support());
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  return supports == m.circuits();
}

// All r-subsets of `pool`.
std::vector<Subset> subsets_of_size(Subset pool, int r) {
  std::vector<Subset> out;
  if (r < 0) return out;
  for_each_subset(pool, [&](Subset s) {
    if (cardinality(s) == r) out.push_back(s);
  });
  return out;
}

}  // namespace

SignedSet SignedSet::make(Subset positive, Subset negative) {
  if ((positive & negative) != 0) {
    throw RangeError("signed set parts overlap at " +
                     brace_subset(positive & negative));
  }
  return {positive, negative};
}

SignedSet SignedSet::canonical() const {
  Subset s = support();
  if (s == 0) return *this;
  return contains(positive, lowest_element(s)) ? *this : -*this;
}

std::string format_signed_set(const SignedSet& x) {
  std::string out;
  if (x.positive != 0) out += "+ " + format_subset(x.positive);
  if (x.negative != 0) {
    if (!out.empty()) out += ' ';
    out += "- " + format_subset(x.negative);
  }
  return out;
}

SignedCircuitSet::SignedCircuitSet(int n, std::vector<SignedSet> circuits)
    : n_(n), circuits_(std::move(circuits)) {
  if (n < 0 || n > kMaxGroundSize) throw CapacityError("ground set too large");
  for (const SignedSet& x : circuits_) {
    if ((x.positive & x.negative) != 0 || !is_subset(x.support(), full_set(n))) {
      throw RangeError("malformed signed set " + format_signed_set(x));
    }
  }
  std::sort(circuits_.begin(), circuits_.end());
  circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());
}

SignedCircuitSet SignedCircuitSet::symmetric(int n, std::span<const SignedSet> reps) {
  std::vector<SignedSet> all;
  for (const SignedSet& x : reps) {
    all.push_back(x);
    all.push_back(-x);
  }
  return SignedCircuitSet(n, std::move(all));
}

bool SignedCircuitSet::contains(const SignedSet& x) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), x);
}

std::vector<SignedSet> SignedCircuitSet::representatives() const {
  std::vector<SignedSet> out;
  for (const SignedSet& x : circuits_) out.push_back(x.canonical());
  std::sort(out.begin(), out.end(), [](const SignedSet& a, const SignedSet& b) {
    return std::make_tuple(a.support(), a.positive) <
           std::make_tuple(b.support(), b.positive);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CircuitAxiomFailure> check_circuit_axioms(const SignedCircuitSet& c,
                                                      EliminationMode mode) {
  std::vector<CircuitAxiomFailure> out;
  auto circuits = c.circuits();
  for (const SignedSet& x : circuits) {
    if (x.support() == 0) out.push_back({"OC0", x, x, -1, -1, "empty signed set"});
    if (!c.contains(-x)) {
      out.push_back({"OC1", x, -x, -1, -1,
                     "negation of " + format_signed_set(x) + " missing"});
    }
  }
  for (const SignedSet& x : circuits) {
    for (const SignedSet& y : circuits) {
      if (x == y || x == -y || !is_subset(x.support(), y.support())) continue;
      out.push_back({"OC2", x, y, -1, -1,
                     "support of " + format_signed_set(x) + " inside support of " +
                         format_signed_set(y)});
    }
  }
  bool basic_ok = out.empty();

  std::vector<int> r;
  bool modular_only = false;
  if (mode == EliminationMode::kModularPairs) {
    r = support_rank(c);
    modular_only = supports_form_matroid(c, r);
  }
  auto considered = [&](const SignedSet& x, const SignedSet& y) {
    if (!modular_only) return true;
    Subset a = x.support(), b = y.support();
    return r[a] + r[b] == r[a | b] + r[a & b];
  };

  std::vector<CircuitAxiomFailure> weak, strong;
  for (const SignedSet& x : circuits) {
    for (const SignedSet& y : circuits) {
      if (!considered(x, y)) continue;
      for (int e : elements_of(x.positive & y.negative)) {
        if (!(x == -y) && !has_eliminant(c, x, y, e, -1)) {
          weak.push_back({"OC3", x, y, e, -1,
                          "no elimination of " + std::to_string(e + 1) +
                              " between " + format_signed_set(x) + " and " +
                              format_signed_set(y)});
        }
        Subset fs = (x.positive & ~y.negative) | (x.negative & ~y.positive);
        for (int f : elements_of(fs)) {
          if (!has_eliminant(c, x, y, e, f)) {
            strong.push_back({"OC3'", x, y, e, f,
                              "no elimination of " + std::to_string(e + 1) +
                                  " keeping " + std::to_string(f + 1) +
                                  " between " + format_signed_set(x) + " and " +
                                  format_signed_set(y)});
          }
        }
      }
    }
  }
  out.insert(out.end(), weak.begin(), weak.end());
  if (basic_ok && weak.empty() != strong.empty()) {
    out.push_back({"internal", {}, {}, -1, -1,
                   "OC3 and OC3' disagree on input satisfying OC0-OC2"});
    out.insert(out.end(), strong.begin(), strong.end());
  }
  return out;
}

Matroid underlying_matroid(const SignedCircuitSet& c) {
  auto failures = check_circuit_axioms(c);
  if (!failures.empty()) {
    throw AxiomError("signed circuits violate " + failures.front().axiom + ": " +
                     failures.front().detail);
  }
  return Matroid(RankFunction(c.ground_size(), support_rank(c)));
}

OrientedCIStructure::OrientedCIStructure(int n) : plus_(n), minus_(n) {}

OrientedCIStructure::OrientedCIStructure(CIStructure plus, CIStructure minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (plus_.ground_size() != minus_.ground_size()) {
    throw RangeError("sign tables on different ground sets");
  }
  for (std::size_t w = 0; w < plus_.words().size(); ++w) {
    if ((plus_.words()[w] & minus_.words()[w]) != 0) {
      throw RangeError("a statement cannot be both positive and negative");
    }
  }
}

void OrientedCIStructure::set(const CIStatement& s, int sign) {
  std::size_t idx = index().index(s);
  plus_.set_index(idx, sign > 0);
  minus_.set_index(idx, sign < 0);
}

CIStructure OrientedCIStructure::zero_set() const {
  int n = ground_size();
  std::vector<std::uint64_t> words(plus_.words().size());
  for (std::size_t w = 0; w < words.size(); ++w) {
    words[w] = ~(plus_.words()[w] | minus_.words()[w]);
  }
  return CIStructure::from_words(n, std::move(words));
}

OrientedCIStructure sigma_of_oriented_matroid(const SignedCircuitSet& c) {
  Matroid m = underlying_matroid(c);
  CIStructure independent = ci_of_matroid(m);  // throws LoopError
  int n = c.ground_size();
  OrientedCIStructure sigma(n);
  const StatementIndex& idx = sigma.index();
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (independent.contains_index(s)) continue;
    CIStatement st = idx.statement(s);
    Subset ij = bit(st.i) | bit(st.j);
    Subset t = st.support();
    std::optional<int> value;
    for (const SignedSet& x : c.circuits()) {
      Subset sup = x.support();
      if (!is_subset(ij, sup) || !is_subset(sup, t)) continue;
      int v = x(st.i) * x(st.j);
      if (value && *value != v) {
        throw ConsistencyError("signed circuits disagree on the sign of " +
                               to_string(st));
      }
      value = v;
    }
    if (!value) {
      throw ConsistencyError("no signed circuit witnesses the dependent statement " +
                             to_string(st));
    }
    sigma.set(st, *value);
  }
  return sigma;
}

namespace {

template <typename Emit>
void oci_instances(const OrientedCIStructure& sigma, Emit&& emit) {
  int n = sigma.ground_size();
  Subset all = full_set(n);
  const StatementIndex& idx = sigma.index();
  auto sg = [&](int a, int b, Subset k) { return sigma.sign(a, b, k); };
  auto id = [&](int a, int b, Subset k) { return idx.index(a, b, k); };

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        if (i == j || i == l || j == l) continue;
        Subset rest = all & ~(bit(i) | bit(j) | bit(l));
        for_each_subset(rest, [&](Subset k) {
          int ij_k = sg(i, j, k);
          if (ij_k != 0) {
            for_each_subset(rest & ~k, [&](Subset ll) {
              Subset cond = bit(j) | k | ll;
              if (sg(i, l, cond) != 0) {
                emit({Axiom::kOci1, {i, j, l}, k, ll,
                      "sigma" + to_string(CIStatement::make(i, j, k)) + " = " +
                          sign_text(ij_k) + " and sigma" +
                          to_string(CIStatement::make(i, l, cond)) + " = " +
                          sign_text(sg(i, l, cond)),
                      id(i, l, cond)});
              }
            });
          }
          if (ij_k == 0 && sg(i, l, k | bit(j)) == 0) {
            bool a = sg(i, j, k | bit(l)) == 0;
            bool b = sg(i, l, k) == 0;
            if (!(a && b)) {
              CIStatement failed = !a ? CIStatement::make(i, j, k | bit(l))
                                      : CIStatement::make(i, l, k);
              emit({Axiom::kOci2, {i, j, l}, k, 0,
                    "sigma" + to_string(CIStatement::make(i, j, k)) +
                        " = sigma" + to_string(CIStatement::make(i, l, k | bit(j))) +
                        " = 0 but sigma" + to_string(failed) + " != 0",
                    idx.index(failed)});
            }
          }
          if (i < j && j < l) {
            int p4 = sg(i, l, k) * sg(i, j, k) * sg(j, l, k);
            if (p4 > 0) {
              emit({Axiom::kOci4, {i, j, l}, k, 0,
                    "sigma(il|K) sigma(ij|K) sigma(jl|K) = +1", id(i, j, k)});
            }
            int p5 = sg(i, l, k | bit(j)) * sg(i, j, k | bit(l)) *
                     sg(j, l, k | bit(i));
            if (p5 < 0) {
              emit({Axiom::kOci5, {i, j, l}, k, 0,
                    "sigma(il|jK) sigma(ij|lK) sigma(jl|iK) = -1",
                    id(i, j, k | bit(l))});
            }
          }
        });
      }
    }
  }
  // OCI3: a violation needs two nonzero values of opposite sign on nested
  // sets, so each one is reported once with K ⊂ L.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Subset rest = all & ~(bit(i) | bit(j));
      for_each_subset(rest, [&](Subset k) {
        int v = sg(i, j, k);
        if (v == 0) return;
        for_each_subset(rest & ~k, [&](Subset extra) {
          if (extra == 0) return;
          Subset l = k | extra;
          if (sg(i, j, l) == -v) {
            emit({Axiom::kOci3, {i, j}, k, l,
                  "sigma" + to_string(CIStatement::make(i, j, k)) + " = " +
                      sign_text(v) + " but sigma" +
                      to_string(CIStatement::make(i, j, l)) + " = " +
                      sign_text(-v),
                  id(i, j, l)});
          }
        });
      });
    }
  }
}

}  // namespace

std::vector<ViolationWitness> check_oci(const OrientedCIStructure& sigma) {
  std::vector<ViolationWitness> out;
  oci_instances(sigma, [&](ViolationWitness w) { out.push_back(std::move(w)); });
  std::sort(out.begin(), out.end(),
            [](const ViolationWitness& a, const ViolationWitness& b) {
              return std::tie(a.conclusion, a.axiom, a.elements, a.k, a.l) <
                     std::tie(b.conclusion, b.axiom, b.elements, b.k, b.l);
            });
  return out;
}

bool reproduces(const ViolationWitness& w, const OrientedCIStructure& sigma) {
  auto sg = [&](int a, int b, Subset k) { return sigma.sign(a, b, k); };
  const auto& e = w.elements;
  Subset k = w.k;
  if (w.axiom == Axiom::kOci3) {
    if (e.size() != 2) return false;
    int v = sg(e[0], e[1], k);
    bool nested = is_subset(k, w.l) || is_subset(w.l, k);
    return nested && v != 0 && sg(e[0], e[1], w.l) == -v;
  }
  if (e.size() != 3) return false;
  int i = e[0], j = e[1], l = e[2];
  switch (w.axiom) {
    case Axiom::kOci1:
      return sg(i, j, k) != 0 && sg(i, l, bit(j) | k | w.l) != 0;
    case Axiom::kOci2:
      return sg(i, j, k) == 0 && sg(i, l, k | bit(j)) == 0 &&
             !(sg(i, j, k | bit(l)) == 0 && sg(i, l, k) == 0);
    case Axiom::kOci4:
      return sg(i, l, k) * sg(i, j, k) * sg(j, l, k) > 0;
    case Axiom::kOci5:
      return sg(i, l, k | bit(j)) * sg(i, j, k | bit(l)) * sg(j, l, k | bit(i)) < 0;
    default:
      return false;
  }
}

SignedCircuitSet oriented_matroid_from_sigma(const OrientedCIStructure& sigma) {
  if (auto w = check_oci(sigma); !w.empty()) {
    throw AxiomError("oriented CI-structure violates " +
                     std::string(axiom_name(w.front().axiom)) + ": " +
                     format_witness(w.front()));
  }
  CIStructure zero = sigma.zero_set();
  if (!is_matroid_ci(zero)) {
    throw AxiomError("zero set of sigma is not a matroid CI-structure");
  }
  Matroid m = matroid_from_ci(zero);
  int n = sigma.ground_size();

  std::vector<SignedSet> reps;
  for (Subset circuit : m.circuits()) {
    std::optional<SignedSet> agreed;
    for (int c0 : elements_of(circuit)) {
      SignedSet x{bit(c0), 0};
      for (int c : elements_of(circuit & ~bit(c0))) {
        int v = sigma.sign(c, c0, circuit & ~(bit(c) | bit(c0)));
        if (v == 0) {
          throw ConsistencyError("sigma vanishes inside circuit " +
                                 brace_subset(circuit));
        }
        (v > 0 ? x.positive : x.negative) |= bit(c);
      }
      x = x.canonical();
      if (agreed && !(*agreed == x)) {
        throw ConsistencyError("circuit signature of " + brace_subset(circuit) +
                               " depends on the base element");
      }
      agreed = x;
    }
    reps.push_back(*agreed);
  }
  SignedCircuitSet out = SignedCircuitSet::symmetric(n, reps);
  if (auto f = check_circuit_axioms(out); !f.empty()) {
    throw ConsistencyError("recovered circuits violate " + f.front().axiom + ": " +
                           f.front().detail);
  }
  if (!(sigma_of_oriented_matroid(out) == sigma)) {
    throw ConsistencyError("recovered oriented matroid does not reproduce sigma");
  }
  return out;
}

Chirotope::Chirotope(int n, int rank, std::vector<signed char> signs)
    : n_(n), rank_(rank), signs_(std::move(signs)) {
  if (n < 1 || n > kMaxGroundSize) throw CapacityError("ground set size out of range");
  if (rank < 1 || rank > n) {
    throw RangeError("chirotope rank must satisfy 1 <= r <= n");
  }
  if (signs_.size() != (std::size_t{1} << n)) {
    throw RangeError("chirotope table needs 2^n entries");
  }
  for (Subset s = 0; s < signs_.size(); ++s) {
    int v = signs_[s];
    if (v < -1 || v > 1) throw RangeError("chirotope values must be -1, 0 or +1");
    if (v != 0 && cardinality(s) != rank) {
      throw RangeError("chirotope value on a set of the wrong size");
    }
  }
}

void Chirotope::set(Subset sorted_tuple, int sign) {
  if (cardinality(sorted_tuple) != rank_ || !is_subset(sorted_tuple, full_set(n_))) {
    throw RangeError("chirotope entry must be an r-subset of [n]");
  }
  signs_[sorted_tuple] = static_cast<signed char>(sign > 0 ? 1 : (sign < 0 ? -1 : 0));
}

int Chirotope::operator()(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != rank_) {
    throw RangeError("chirotope evaluated on a tuple of the wrong length");
  }
  Subset s = 0;
  int inversions = 0;
  for (std::size_t a = 0; a < tuple.size(); ++a) {
    if (contains(s, tuple[a])) return 0;
    s |= bit(tuple[a]);
    for (std::size_t b = a + 1; b < tuple.size(); ++b) {
      if (tuple[a] > tuple[b]) ++inversions;
    }
  }
  int v = signs_[s];
  return inversions % 2 == 0 ? v : -v;
}

std::vector<Subset> Chirotope::support() const {
  std::vector<Subset> out;
  for (Subset s = 0; s < signs_.size(); ++s) {
    if (signs_[s] != 0) out.push_back(s);
  }
  return out;
}

Chirotope Chirotope::operator-() const {
  Chirotope out = *this;
  for (auto& v : out.signs_) v = static_cast<signed char>(-v);
  return out;
}

std::vector<std::string> chirotope_validate(const Chirotope& chi) {
  std::vector<std::string> out;
  std::vector<Subset> bases = chi.support();
  if (bases.empty()) {
    out.push_back("chirotope is identically zero");
    return out;
  }
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      for (int x : elements_of(b1 & ~b2)) {
        bool found = false;
        for (int y : elements_of(b2 & ~b1)) {
          if (chi.sign((b1 & ~bit(x)) | bit(y)) != 0) {
            found = true;
            break;
          }
        }
        if (!found) {
          out.push_back("basis exchange fails: " + brace_subset(b1) + " minus " +
                        std::to_string(x + 1) + " has no replacement from " +
                        brace_subset(b2));
        }
      }
    }
  }
  return out;
}

Matroid chirotope_matroid(const Chirotope& chi) {
  if (auto f = chirotope_validate(chi); !f.empty()) {
    throw ValidationError("invalid chirotope: " + f.front());
  }
  std::vector<Subset> bases = chi.support();
  return Matroid::from_bases(chi.ground_size(), bases);
}

OrientedCIStructure sigma_from_chirotope(const Chirotope& chi) {
  Matroid m = chirotope_matroid(chi);
  CIStructure independent = ci_of_matroid(m);  // throws LoopError
  int n = chi.ground_size();
  int r = chi.rank();
  Subset all = full_set(n);
  OrientedCIStructure sigma(n);
  const StatementIndex& idx = sigma.index();
  std::vector<int> tuple(r);
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (independent.contains_index(s)) continue;
    CIStatement st = idx.statement(s);
    int rk = m.rank(st.k);
    Subset outside = all & ~st.support();
    std::optional<int> value;
    for (Subset b : subsets_of_size(st.k, rk)) {
      if (!m.is_independent(b)) continue;
      for (Subset a : subsets_of_size(outside, r - rk - 1)) {
        std::vector<int> rest = elements_of(b);
        for (int e : elements_of(a)) rest.push_back(e);
        tuple[0] = st.i;
        std::copy(rest.begin(), rest.end(), tuple.begin() + 1);
        int chi_i = chi(tuple);
        if (chi_i == 0) continue;
        tuple[0] = st.j;
        int v = -chi_i * chi(tuple);
        if (v == 0) {
          throw ConsistencyError("chirotope vanishes on the j-side for " +
                                 to_string(st));
        }
        if (value && *value != v) {
          throw ConsistencyError("basis choices disagree on the sign of " +
                                 to_string(st));
        }
        value = v;
      }
    }
    if (!value) {
      throw ConsistencyError("no basis witnesses the dependent statement " +
                             to_string(st));
    }
    sigma.set(st, *value);
  }
  return sigma;
}

}  // namespace cimat
