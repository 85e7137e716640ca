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

// Exact rational helpers on top of GMP's mpq_class.

#ifndef CIMAT_RATIONAL_H_
#define CIMAT_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cimat {

using Rational = mpq_class;

// Parses "p/q", "p" or "-p/q" exactly. Throws ParseError (line 0) on
// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

// -1, 0 or +1.
inline int sign(const Rational& q) { return sgn(q); }

}  // namespace cimat

#endif  // CIMAT_RATIONAL_H_
