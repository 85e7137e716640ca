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

#ifndef CIMAT_SUBSET_H_
#define CIMAT_SUBSET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cimat {

// Subsets of a ground set are n-bit patterns; element e (0-based) is bit e.
// Public text formats label elements 1..n.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSize = 16;

constexpr Subset bit(int e) { return Subset{1} << e; }
constexpr Subset full_set(int n) { return n >= 32 ? ~Subset{0} : bit(n) - 1; }
constexpr int cardinality(Subset s) { return std::popcount(s); }
constexpr bool contains(Subset s, int e) { return (s >> e) & 1U; }
constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr int lowest_element(Subset s) { return std::countr_zero(s); }

// Builds a subset from 0-based elements.
inline Subset make_subset(std::initializer_list<int> elements) {
  Subset s = 0;
  for (int e : elements) s |= bit(e);
  return s;
}

// Builds a subset from 1-based labels, e.g. labels({1, 3}) == 0b101.
inline Subset labels(std::initializer_list<int> one_based) {
  Subset s = 0;
  for (int e : one_based) s |= bit(e - 1);
  return s;
}

inline std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

// Packs the bits of `s` that lie in `kept` into positions 0..|kept|-1,
// preserving element order.
inline Subset compress(Subset s, Subset kept) {
  Subset out = 0;
  int pos = 0;
  while (kept != 0) {
    int e = std::countr_zero(kept);
    if (contains(s, e)) out |= bit(pos);
    ++pos;
    kept &= kept - 1;
  }
  return out;
}

// Inverse of compress: spreads bits 0..|kept|-1 onto the elements of `kept`.
inline Subset expand(Subset packed, Subset kept) {
  Subset out = 0;
  int pos = 0;
  while (kept != 0) {
    int e = std::countr_zero(kept);
    if (contains(packed, pos)) out |= bit(e);
    ++pos;
    kept &= kept - 1;
  }
  return out;
}

// Calls f(sub) for every subset of `s`, including 0 and `s` itself.
template <typename F>
void for_each_subset(Subset s, F&& f) {
  Subset sub = 0;
  while (true) {
    f(sub);
    if (sub == s) break;
    sub = (sub - s) & s;
  }
}

// Space-separated 1-based labels, empty string for the empty set.
inline std::string format_subset(Subset s) {
  std::string out;
  for (int e : elements_of(s)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e + 1);
  }
  return out;
}

// Human form used in messages: "{1,3}" or "∅".
inline std::string brace_subset(Subset s) {
  if (s == 0) return "\xE2\x88\x85";
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out += ',';
    out += std::to_string(e + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace cimat

#endif  // CIMAT_SUBSET_H_
