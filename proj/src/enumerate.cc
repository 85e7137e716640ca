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

// Brute-force oracle: every loopless matroid on a small ground set.

#include <algorithm>
#include <vector>

#include "cimat/errors.h"
#include "cimat/matroid.h"

namespace cimat {
namespace {

// |I| < |J| for members I, J implies some x in J \ I with I + x a member.
bool augmentation_holds(const std::vector<Subset>& members,
                        const std::vector<bool>& in) {
  for (Subset i : members) {
    for (Subset j : members) {
      if (cardinality(i) >= cardinality(j)) continue;
      bool found = false;
      for (int x : elements_of(j & ~i)) {
        if (in[i | bit(x)]) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Matroid> enumerate_loopless_matroids(int n) {
  if (n < 1 || n > kMaxMatroidEnumeration) {
    throw CapacityError("matroid enumeration limited to 1 <= n <= " +
                        std::to_string(kMaxMatroidEnumeration));
  }
  Subset all = full_set(n);
  // Candidate sets of size >= 2 by increasing size, so every facet
  // S \ x is decided before S.
  std::vector<Subset> candidates;
  for (Subset s = 0; s <= all; ++s) {
    if (cardinality(s) >= 2) candidates.push_back(s);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](Subset a, Subset b) {
    return cardinality(a) < cardinality(b);
  });

  std::vector<bool> in(std::size_t{1} << n, false);
  in[0] = true;
  for (int e = 0; e < n; ++e) in[bit(e)] = true;

  std::vector<Matroid> out;
  auto emit = [&]() {
    std::vector<Subset> members;
    for (Subset s = 0; s <= all; ++s) {
      if (in[s]) members.push_back(s);
    }
    if (!augmentation_holds(members, in)) return;
    out.push_back(Matroid::from_independent_sets(SetFamily(n, members)));
  };
  // Depth-first over include/exclude decisions; a set may only be included
  // when all of its facets are.
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == candidates.size()) {
      emit();
      return;
    }
    Subset s = candidates[pos];
    self(self, pos + 1);
    bool closed = true;
    for (int e : elements_of(s)) {
      if (!in[s & ~bit(e)]) {
        closed = false;
        break;
      }
    }
    if (closed) {
      in[s] = true;
      self(self, pos + 1);
      in[s] = false;
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace cimat
