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

// Line-oriented UTF-8 text formats. '#' starts a comment anywhere, blank
// lines are ignored, elements are labeled 1..n. The first line is a header
// naming the kind:
//
//   ci n=3                 "1 2 | 3" per member statement
//   oci n=3                "+ 1 2 | 3" or "- 1 2 |"; unlisted statements are 0
//   matroid n=3            "rank" then 2^n lines "1 3 : 2" (empty set ": 0"),
//                          or "bases" then one basis per line
//   setfn n=2              2^n lines "1 2 : 3/2"
//   signed-circuits n=3    "+ 1 2 - 3" per ± pair (negation implicit)
//   chirotope n=3 r=2      "1 2 +"; unlisted sorted tuples are 0
//   matrix n=2             n rows of n rationals
//   vectors d=2 n=3        d rows of n rationals, column c is vector c
//
// Parsers throw ParseError with the offending line; writers emit canonical
// order so output is byte-stable.

#ifndef CIMAT_TEXT_FORMAT_H_
#define CIMAT_TEXT_FORMAT_H_

#include <string>
#include <string_view>

#include "cimat/ci_structure.h"
#include "cimat/matroid.h"
#include "cimat/models.h"
#include "cimat/oriented.h"

namespace cimat {

enum class FileKind {
  kCi,
  kOci,
  kMatroid,
  kSetFunction,
  kSignedCircuits,
  kChirotope,
  kMatrix,
  kVectors,
};

std::string_view file_kind_name(FileKind k);
// Reads the header line only.
FileKind detect_kind(std::string_view text);

CIStructure parse_ci(std::string_view text);
std::string write_ci(const CIStructure& g);

OrientedCIStructure parse_oci(std::string_view text);
std::string write_oci(const OrientedCIStructure& sigma);

// Validates the matroid axioms (AxiomError).
Matroid parse_matroid(std::string_view text);
// Rank form.
std::string write_matroid(const Matroid& m);
// Bases form.
std::string write_matroid_bases(const Matroid& m);

SetFunction parse_set_function(std::string_view text);
std::string write_set_function(const SetFunction& h);

SignedCircuitSet parse_signed_circuits(std::string_view text);
std::string write_signed_circuits(const SignedCircuitSet& c);

Chirotope parse_chirotope(std::string_view text);
std::string write_chirotope(const Chirotope& chi);

RationalMatrix parse_matrix(std::string_view text);
std::string write_matrix(const RationalMatrix& m);

VectorConfiguration parse_vectors(std::string_view text);
std::string write_vectors(const VectorConfiguration& v);

}  // namespace cimat

#endif  // CIMAT_TEXT_FORMAT_H_
