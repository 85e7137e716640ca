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

#include "cimat/ci_structure.h"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <numeric>
#include <utility>

#include "cimat/errors.h"

namespace cimat {
namespace {

void check_storage_size(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw CapacityError("ground set size " + std::to_string(n) +
                        " outside 0.." + std::to_string(kMaxGroundSize));
  }
}

std::size_t raw_statement_count(int n) {
  if (n < 2) return 0;
  return static_cast<std::size_t>(n) * (n - 1) / 2 * (std::size_t{1} << (n - 2));
}

}  // namespace

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw CapacityError("ground set size " + std::to_string(n) +
                        " outside 1.." + std::to_string(kMaxGroundSize));
  }
}

CIStatement CIStatement::make(int a, int b, Subset k) {
  if (a == b) throw RangeError("CI-statement needs i != j");
  if (a < 0 || b < 0 || a >= kMaxGroundSize || b >= kMaxGroundSize) {
    throw RangeError("CI-statement element out of range");
  }
  if (contains(k, a) || contains(k, b)) {
    throw RangeError("conditioning set of a CI-statement must avoid i and j");
  }
  if (a > b) std::swap(a, b);
  return CIStatement{a, b, k};
}

std::string to_string(const CIStatement& s) {
  bool wide = s.j >= 9 || (s.k >> 9) != 0;
  std::string sep = wide ? "," : "";
  std::string out = "(" + std::to_string(s.i + 1) + sep + std::to_string(s.j + 1) + "|";
  bool first = true;
  for (int e : elements_of(s.k)) {
    if (!first) out += sep;
    out += std::to_string(e + 1);
    first = false;
  }
  return out + ")";
}

std::uint64_t statement_count(int n) {
  if (n < 2 || n > kMaxGroundSize) {
    throw CapacityError("statement_count needs 2 <= n <= " +
                        std::to_string(kMaxGroundSize) + ", got " +
                        std::to_string(n));
  }
  return raw_statement_count(n);
}

StatementIndex::StatementIndex(int n)
    : n_(n), size_(raw_statement_count(n)), pair_offset_(n * n, 0) {
  check_storage_size(n);
  std::size_t block = n >= 2 ? std::size_t{1} << (n - 2) : 0;
  std::size_t offset = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pair_offset_[i * n + j] = offset;
      offset += block;
    }
  }
}

std::size_t StatementIndex::index(const CIStatement& s) const {
  Subset rest = full_set(n_) & ~(bit(s.i) | bit(s.j));
  return pair_offset_[s.i * n_ + s.j] + compress(s.k, rest);
}

CIStatement StatementIndex::statement(std::size_t idx) const {
  std::size_t block = std::size_t{1} << (n_ - 2);
  std::size_t pair = idx / block;
  int i = 0;
  while (pair >= static_cast<std::size_t>(n_ - 1 - i)) {
    pair -= n_ - 1 - i;
    ++i;
  }
  int j = i + 1 + static_cast<int>(pair);
  Subset rest = full_set(n_) & ~(bit(i) | bit(j));
  return CIStatement{i, j, expand(static_cast<Subset>(idx % block), rest)};
}

std::shared_ptr<const StatementIndex> statement_index(int n) {
  check_storage_size(n);
  static std::mutex mu;
  static std::array<std::shared_ptr<const StatementIndex>, kMaxGroundSize + 1>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[n]) cache[n] = std::make_shared<const StatementIndex>(n);
  return cache[n];
}

CIStructure::CIStructure(int n)
    : n_(n),
      size_(raw_statement_count(n)),
      index_(statement_index(n)),
      words_((size_ + 63) / 64, 0) {}

CIStructure CIStructure::full(int n) {
  CIStructure g(n);
  std::fill(g.words_.begin(), g.words_.end(), ~std::uint64_t{0});
  if (g.size_ % 64 != 0) g.words_.back() &= (std::uint64_t{1} << (g.size_ % 64)) - 1;
  return g;
}

CIStructure CIStructure::from_statements(int n,
                                         std::span<const CIStatement> members) {
  CIStructure g(n);
  for (const CIStatement& s : members) {
    if (s.j >= n) throw RangeError("statement " + to_string(s) + " outside [n]");
    g.insert(s);
  }
  return g;
}

CIStructure CIStructure::from_words(int n, std::vector<std::uint64_t> words) {
  CIStructure g(n);
  if (words.size() != g.words_.size()) {
    throw RangeError("membership table has the wrong length");
  }
  g.words_ = std::move(words);
  if (g.size_ % 64 != 0) g.words_.back() &= (std::uint64_t{1} << (g.size_ % 64)) - 1;
  return g;
}

void CIStructure::set_index(std::size_t idx, bool member) {
  std::uint64_t mask = std::uint64_t{1} << (idx & 63);
  if (member) {
    words_[idx >> 6] |= mask;
  } else {
    words_[idx >> 6] &= ~mask;
  }
}

std::size_t CIStructure::member_count() const {
  std::size_t count = 0;
  for (std::uint64_t w : words_) count += std::popcount(w);
  return count;
}

std::vector<CIStatement> CIStructure::statements() const {
  std::vector<CIStatement> out;
  for (std::size_t idx = 0; idx < size_; ++idx) {
    if (contains_index(idx)) out.push_back(index_->statement(idx));
  }
  return out;
}

CIStructure CIStructure::complement() const {
  CIStructure g = full(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) g.words_[w] &= ~words_[w];
  return g;
}

namespace {

std::vector<int> kept_labels(int n, Subset a) {
  std::vector<int> original;
  for (int e = 0; e < n; ++e) {
    if (!contains(a, e)) original.push_back(e);
  }
  return original;
}

void check_within(const CIStructure& g, Subset a) {
  if (!is_subset(a, full_set(g.ground_size()))) {
    throw RangeError("element set " + brace_subset(a) + " not contained in [" +
                     std::to_string(g.ground_size()) + "]");
  }
}

}  // namespace

CIStructure minor(const CIStructure& g, Subset deleted, Subset contracted) {
  check_within(g, deleted | contracted);
  if ((deleted & contracted) != 0) {
    throw RangeError("deleted and contracted sets must be disjoint");
  }
  int n = g.ground_size();
  Subset kept = full_set(n) & ~(deleted | contracted);
  int m = cardinality(kept);
  CIStructure out(m);
  const StatementIndex& idx = out.index();
  for (std::size_t s = 0; s < idx.size(); ++s) {
    CIStatement local = idx.statement(s);
    Subset k = expand(local.k, kept) | contracted;
    int i = std::countr_zero(expand(bit(local.i), kept));
    int j = std::countr_zero(expand(bit(local.j), kept));
    if (g.contains(i, j, k)) out.set_index(s, true);
  }
  return out;
}

ReducedStructure deletion(const CIStructure& g, Subset a) {
  return {minor(g, a, 0), kept_labels(g.ground_size(), a)};
}

ReducedStructure contraction(const CIStructure& g, Subset a) {
  return {minor(g, 0, a), kept_labels(g.ground_size(), a)};
}

CIStructure dual(const CIStructure& g) {
  int n = g.ground_size();
  CIStructure out(n);
  for (std::size_t s = 0; s < g.statement_count(); ++s) {
    if (!g.contains_index(s)) continue;
    CIStatement st = g.index().statement(s);
    out.insert(CIStatement{st.i, st.j, full_set(n) & ~st.support()});
  }
  return out;
}

CIStructure direct_sum(const CIStructure& g1, const CIStructure& g2) {
  int n1 = g1.ground_size();
  int n2 = g2.ground_size();
  int n = n1 + n2;
  check_storage_size(n);
  Subset first = full_set(n1);
  CIStructure out(n);
  for (std::size_t s = 0; s < out.statement_count(); ++s) {
    CIStatement st = out.index().statement(s);
    bool i_first = st.i < n1;
    bool j_first = st.j < n1;
    bool member = false;
    if (i_first != j_first) {
      member = true;
    } else if (i_first) {
      member = g1.contains(st.i, st.j, st.k & first);
    } else {
      member = g2.contains(st.i - n1, st.j - n1, (st.k & ~first) >> n1);
    }
    if (member) out.set_index(s, true);
  }
  return out;
}

std::vector<Minor> minors(const CIStructure& g) {
  int n = g.ground_size();
  if (n > kMaxMinorsGround) {
    throw CapacityError("minors limited to n <= " +
                        std::to_string(kMaxMinorsGround));
  }
  std::vector<Minor> out;
  Subset all = full_set(n);
  for (Subset a = 0; a <= all; ++a) {
    for_each_subset(all & ~a, [&](Subset b) {
      out.push_back(Minor{minor(g, a, b), a, b, (a | b) != 0});
    });
  }
  return out;
}

Subset relabel(Subset s, const Permutation& perm) {
  Subset out = 0;
  for (int e : elements_of(s)) out |= bit(perm[e]);
  return out;
}

CIStructure relabel(const CIStructure& g, const Permutation& perm) {
  int n = g.ground_size();
  if (static_cast<int>(perm.size()) != n) {
    throw RangeError("permutation length does not match the ground set");
  }
  CIStructure out(n);
  for (std::size_t s = 0; s < g.statement_count(); ++s) {
    if (!g.contains_index(s)) continue;
    CIStatement st = g.index().statement(s);
    out.insert(CIStatement::make(perm[st.i], perm[st.j], relabel(st.k, perm)));
  }
  return out;
}

std::vector<std::size_t> conditioning_profile(const CIStructure& g) {
  std::vector<std::size_t> profile(std::max(g.ground_size() - 1, 1), 0);
  for (std::size_t s = 0; s < g.statement_count(); ++s) {
    if (g.contains_index(s)) ++profile[cardinality(g.index().statement(s).k)];
  }
  return profile;
}

std::optional<Permutation> isomorphic(const CIStructure& g1,
                                      const CIStructure& g2) {
  int n = g1.ground_size();
  if (g2.ground_size() != n) {
    throw RangeError("isomorphism test needs equal ground set sizes");
  }
  if (n > kMaxIsomorphismGround) {
    throw CapacityError("isomorphism test limited to n <= " +
                        std::to_string(kMaxIsomorphismGround));
  }
  if (conditioning_profile(g1) != conditioning_profile(g2)) return std::nullopt;

  std::vector<CIStatement> members = g1.statements();
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Equal member counts make "every image lands in G2" a bijection.
    bool maps = std::all_of(members.begin(), members.end(),
                            [&](const CIStatement& st) {
                              return g2.contains(perm[st.i], perm[st.j],
                                                 relabel(st.k, perm));
                            });
    if (maps) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace cimat
