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

#include <algorithm>
#include <thread>
#include <tuple>

#include "cimat/errors.h"

namespace cimat {
namespace {

// Visits (i, j, l) pairwise distinct with rest = [n] \ ijl.
template <typename F>
void for_each_ordered_triple(int n, F&& f) {
  Subset all = full_set(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        f(i, j, l, all & ~(bit(i) | bit(j) | bit(l)));
      }
    }
  }
}

std::string member_text(const CIStructure& g, int i, int j, Subset k) {
  CIStatement s = CIStatement::make(i, j, k);
  return to_string(s) + (g.contains(s) ? " in G" : " not in G");
}

// Early-exit driver: `visit` returns false to stop.
template <typename Visit>
void semigraphoid_instances(const CIStructure& g, Visit&& visit) {
  bool go = true;
  for_each_ordered_triple(g.ground_size(), [&](int i, int j, int l, Subset rest) {
    if (!go) return;
    for_each_subset(rest, [&](Subset k) {
      if (!go) return;
      if (!g.contains(i, j, k) || !g.contains(i, l, k | bit(j))) return;
      bool c1 = g.contains(i, l, k);
      bool c2 = g.contains(i, j, k | bit(l));
      if (c1 && c2) return;
      ViolationWitness w{Axiom::kSemigraphoid, {i, j, l}, k, 0, "", 0};
      CIStatement failed = c1 ? CIStatement::make(i, j, k | bit(l))
                              : CIStatement::make(i, l, k);
      w.conclusion = g.index().index(failed);
      w.detail = member_text(g, i, j, k) + ", " +
                 member_text(g, i, l, k | bit(j)) + ", but " +
                 to_string(failed) + " not in G";
      go = visit(std::move(w));
    });
  });
}

template <typename Visit>
void mci_instances(const CIStructure& g, Visit&& visit) {
  bool go = true;
  for_each_ordered_triple(g.ground_size(), [&](int i, int j, int l, Subset rest) {
    if (!go) return;
    for_each_subset(rest, [&](Subset k) {
      if (!go || g.contains(i, j, k)) return;
      for_each_subset(rest & ~k, [&](Subset ll) {
        if (!go) return;
        CIStatement concl = CIStatement::make(i, l, bit(j) | k | ll);
        if (g.contains(concl)) return;
        ViolationWitness w{Axiom::kMci, {i, j, l}, k, ll, "", 0};
        w.conclusion = g.index().index(concl);
        w.detail = to_string(CIStatement::make(i, j, k)) + " and " +
                   to_string(concl) + " both not in G";
        go = visit(std::move(w));
      });
    });
  });
}

// Int and Comp are symmetric in (j, k); WT is symmetric in (i, j).
template <typename Visit>
void gaussoid_only_instances(const CIStructure& g, Visit&& visit) {
  int n = g.ground_size();
  Subset all = full_set(n);
  bool go = true;
  auto emit = [&](ViolationWitness w) {
    if (go) go = visit(std::move(w));
  };
  for (int i = 0; i < n && go; ++i) {
    for (int j = 0; j < n && go; ++j) {
      for (int k = 0; k < n && go; ++k) {
        if (i == j || i == k || j == k) continue;
        Subset rest = all & ~(bit(i) | bit(j) | bit(k));
        for_each_subset(rest, [&](Subset ll) {
          if (!go) return;
          bool ij_l = g.contains(i, j, ll);
          bool ik_l = g.contains(i, k, ll);
          bool ij_kl = g.contains(i, j, ll | bit(k));
          bool ik_jl = g.contains(i, k, ll | bit(j));
          if (j < k) {
            if (ij_kl && ik_jl && !(ij_l && ik_l)) {
              CIStatement failed = !ij_l ? CIStatement::make(i, j, ll)
                                         : CIStatement::make(i, k, ll);
              emit({Axiom::kIntersection, {i, j, k}, ll, 0,
                    to_string(CIStatement::make(i, j, ll | bit(k))) + " and " +
                        to_string(CIStatement::make(i, k, ll | bit(j))) +
                        " in G but " + to_string(failed) + " not in G",
                    g.index().index(failed)});
            }
            if (ij_l && ik_l && !(ij_kl && ik_jl)) {
              CIStatement failed = !ij_kl ? CIStatement::make(i, j, ll | bit(k))
                                          : CIStatement::make(i, k, ll | bit(j));
              emit({Axiom::kComposition, {i, j, k}, ll, 0,
                    to_string(CIStatement::make(i, j, ll)) + " and " +
                        to_string(CIStatement::make(i, k, ll)) +
                        " in G but " + to_string(failed) + " not in G",
                    g.index().index(failed)});
            }
          }
          if (i < j && ij_l && ij_kl && !ik_l && !g.contains(j, k, ll)) {
            CIStatement failed = CIStatement::make(i, k, ll);
            emit({Axiom::kWeakTransitivity, {i, j, k}, ll, 0,
                  to_string(CIStatement::make(i, j, ll)) + " and " +
                      to_string(CIStatement::make(i, j, ll | bit(k))) +
                      " in G but neither " + to_string(failed) + " nor " +
                      to_string(CIStatement::make(j, k, ll)),
                  g.index().index(failed)});
          }
        });
      }
    }
  }
}

void sort_witnesses(std::vector<ViolationWitness>& ws) {
  std::sort(ws.begin(), ws.end(),
            [](const ViolationWitness& a, const ViolationWitness& b) {
              return std::tie(a.conclusion, a.axiom, a.elements, a.k, a.l) <
                     std::tie(b.conclusion, b.axiom, b.elements, b.k, b.l);
            });
}

template <typename Driver>
std::vector<ViolationWitness> collect(const CIStructure& g, Driver&& driver) {
  std::vector<ViolationWitness> out;
  driver(g, [&](ViolationWitness w) {
    out.push_back(std::move(w));
    return true;
  });
  return out;
}

template <typename Driver>
bool none(const CIStructure& g, Driver&& driver) {
  bool ok = true;
  driver(g, [&](ViolationWitness) {
    ok = false;
    return false;
  });
  return ok;
}

}  // namespace

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kSemigraphoid: return "SG";
    case Axiom::kMci: return "MCI";
    case Axiom::kIntersection: return "Int";
    case Axiom::kComposition: return "Comp";
    case Axiom::kWeakTransitivity: return "WT";
    case Axiom::kOci1: return "OCI1";
    case Axiom::kOci2: return "OCI2";
    case Axiom::kOci3: return "OCI3";
    case Axiom::kOci4: return "OCI4";
    case Axiom::kOci5: return "OCI5";
  }
  return "?";
}

std::string format_witness(const ViolationWitness& w) {
  std::string out(axiom_name(w.axiom));
  for (int e : w.elements) out += " " + std::to_string(e + 1);
  out += " |";
  if (w.k != 0) out += " " + format_subset(w.k);
  out += " ;";
  if (w.l != 0) out += " " + format_subset(w.l);
  return out;
}

std::vector<ViolationWitness> check_semigraphoid(const CIStructure& g) {
  auto out = collect(g, [](const CIStructure& s, auto&& v) {
    semigraphoid_instances(s, v);
  });
  sort_witnesses(out);
  return out;
}

std::vector<ViolationWitness> check_mci(const CIStructure& g) {
  auto out = collect(g, [](const CIStructure& s, auto&& v) { mci_instances(s, v); });
  sort_witnesses(out);
  return out;
}

std::vector<ViolationWitness> check_gaussoid(const CIStructure& g) {
  auto out = collect(g, [](const CIStructure& s, auto&& v) {
    gaussoid_only_instances(s, v);
    semigraphoid_instances(s, v);
  });
  sort_witnesses(out);
  return out;
}

bool satisfies_semigraphoid(const CIStructure& g) {
  return none(g, [](const CIStructure& s, auto&& v) { semigraphoid_instances(s, v); });
}

bool satisfies_mci(const CIStructure& g) {
  return none(g, [](const CIStructure& s, auto&& v) { mci_instances(s, v); });
}

bool is_matroid_ci(const CIStructure& g) {
  return satisfies_mci(g) && satisfies_semigraphoid(g);
}

bool is_gaussoid(const CIStructure& g) {
  return none(g, [](const CIStructure& s, auto&& v) {
           gaussoid_only_instances(s, v);
         }) &&
         satisfies_semigraphoid(g);
}

bool reproduces(const ViolationWitness& w, const CIStructure& g) {
  auto in = [&](int a, int b, Subset k) { return g.contains(a, b, k); };
  const auto& e = w.elements;
  if (e.size() != 3) return false;
  int i = e[0], j = e[1], x = e[2];
  Subset k = w.k;
  switch (w.axiom) {
    case Axiom::kSemigraphoid:
      return in(i, j, k) && in(i, x, k | bit(j)) &&
             !(in(i, x, k) && in(i, j, k | bit(x)));
    case Axiom::kMci:
      return (w.k & w.l) == 0 && !in(i, j, k) && !in(i, x, bit(j) | k | w.l);
    case Axiom::kIntersection:
      return in(i, j, k | bit(x)) && in(i, x, k | bit(j)) &&
             !(in(i, j, k) && in(i, x, k));
    case Axiom::kComposition:
      return in(i, j, k) && in(i, x, k) &&
             !(in(i, j, k | bit(x)) && in(i, x, k | bit(j)));
    case Axiom::kWeakTransitivity:
      return in(i, j, k) && in(i, j, k | bit(x)) && !in(i, x, k) &&
             !in(j, x, k);
    default:
      return false;
  }
}

CompiledMatroidRules::CompiledMatroidRules(int n) {
  if (n < 0 || n > kMaxMatroidCiScan) {
    throw CapacityError("compiled rules need at most 64 statements (n <= 4)");
  }
  auto idx = statement_index(n);
  auto mask = [&](int a, int b, Subset k) {
    return std::uint64_t{1} << idx->index(a, b, k);
  };
  for_each_ordered_triple(n, [&](int i, int j, int l, Subset rest) {
    for_each_subset(rest, [&](Subset k) {
      implications_.emplace_back(mask(i, j, k) | mask(i, l, k | bit(j)),
                                 mask(i, l, k) | mask(i, j, k | bit(l)));
      for_each_subset(rest & ~k, [&](Subset ll) {
        disjunctions_.emplace_back(mask(i, j, k), mask(i, l, bit(j) | k | ll));
      });
    });
  });
  std::sort(disjunctions_.begin(), disjunctions_.end());
  disjunctions_.erase(std::unique(disjunctions_.begin(), disjunctions_.end()),
                      disjunctions_.end());
  std::sort(implications_.begin(), implications_.end());
  implications_.erase(std::unique(implications_.begin(), implications_.end()),
                      implications_.end());
}

bool CompiledMatroidRules::holds(std::uint64_t members) const {
  for (const auto& [a, b] : disjunctions_) {
    if ((members & (a | b)) == 0) return false;
  }
  for (const auto& [premise, conclusion] : implications_) {
    if ((members & premise) == premise && (members & conclusion) != conclusion) {
      return false;
    }
  }
  return true;
}

std::vector<CIStructure> enumerate_matroid_ci(int n, unsigned workers) {
  if (n < 1 || n > kMaxMatroidCiScan) {
    throw CapacityError("matroid CI scan limited to 1 <= n <= " +
                        std::to_string(kMaxMatroidCiScan));
  }
  CompiledMatroidRules rules(n);
  std::uint64_t total = std::uint64_t{1} << statement_index(n)->size();
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::vector<std::vector<std::uint64_t>> found(workers);
  auto scan = [&](unsigned w) {
    std::uint64_t begin = total * w / workers;
    std::uint64_t end = total * (w + 1) / workers;
    for (std::uint64_t m = begin; m < end; ++m) {
      if (rules.holds(m)) found[w].push_back(m);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(scan, w);
    scan(0);
  }
  std::vector<CIStructure> out;
  for (const auto& part : found) {
    for (std::uint64_t m : part) {
      out.push_back(n < 2 ? CIStructure(n) : CIStructure::from_words(n, {m}));
    }
  }
  return out;
}

}  // namespace cimat
