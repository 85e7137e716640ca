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

#include "cimat/text_format.h"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "cimat/errors.h"

namespace cimat {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Splits on whitespace; '|' and ':' always form their own tokens.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      flush();
    } else if (ch == '|' || ch == ':') {
      flush();
      out.emplace_back(1, ch);
    } else {
      cur += ch;
    }
  }
  flush();
  return out;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    auto tokens = tokenize(raw);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    pos = end + 1;
  }
  return out;
}

int parse_int(const std::string& token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

struct Header {
  std::string kind;
  std::map<std::string, int> params;
  int line = 0;
};

Header read_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "empty input, expected a header line");
  const Line& first = lines.front();
  Header h{first.tokens[0], {}, first.number};
  for (std::size_t t = 1; t < first.tokens.size(); ++t) {
    const std::string& tok = first.tokens[t];
    std::size_t eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError(first.number, "malformed header parameter '" + tok + "'");
    }
    std::string key = tok.substr(0, eq);
    if (h.params.count(key) != 0) {
      throw ParseError(first.number, "duplicate header parameter '" + key + "'");
    }
    h.params[key] = parse_int(tok.substr(eq + 1), first.number);
  }
  return h;
}

Header expect_header(const std::vector<Line>& lines, std::string_view kind,
                     std::initializer_list<std::string_view> keys) {
  Header h = read_header(lines);
  if (h.kind != kind) {
    throw ParseError(h.line, "expected a '" + std::string(kind) + "' header, got '" +
                                 h.kind + "'");
  }
  for (std::string_view key : keys) {
    if (h.params.count(std::string(key)) == 0) {
      throw ParseError(h.line, "header lacks " + std::string(key) + "=");
    }
  }
  if (h.params.size() != keys.size()) {
    throw ParseError(h.line, "unexpected header parameter");
  }
  return h;
}

int ground_param(const Header& h, const char* key = "n") {
  int n = h.params.at(key);
  if (n < 1 || n > kMaxGroundSize) {
    throw ParseError(h.line, std::string(key) + "=" + std::to_string(n) +
                                 " outside 1.." + std::to_string(kMaxGroundSize));
  }
  return n;
}

int parse_element(const std::string& token, int n, int line) {
  int e = parse_int(token, line);
  if (e < 1 || e > n) {
    throw ParseError(line, "element " + token + " outside 1.." + std::to_string(n));
  }
  return e - 1;
}

Subset parse_elements(const std::vector<std::string>& tokens, std::size_t begin,
                      std::size_t end, int n, int line) {
  Subset s = 0;
  for (std::size_t t = begin; t < end; ++t) {
    int e = parse_element(tokens[t], n, line);
    if (contains(s, e)) throw ParseError(line, "element " + tokens[t] + " repeated");
    s |= bit(e);
  }
  return s;
}

// "i j | K" starting at tokens[begin].
CIStatement parse_statement(const Line& line, std::size_t begin, int n) {
  const auto& tok = line.tokens;
  if (tok.size() < begin + 3 || tok[begin + 2] != "|") {
    throw ParseError(line.number, "expected 'i j | K'");
  }
  int i = parse_element(tok[begin], n, line.number);
  int j = parse_element(tok[begin + 1], n, line.number);
  if (i == j) throw ParseError(line.number, "statement needs i != j");
  Subset k = parse_elements(tok, begin + 3, tok.size(), n, line.number);
  if (contains(k, i) || contains(k, j)) {
    throw ParseError(line.number, "conditioning set contains i or j");
  }
  return CIStatement::make(i, j, k);
}

std::string statement_line(const CIStatement& s) {
  std::string out = std::to_string(s.i + 1) + " " + std::to_string(s.j + 1) + " |";
  if (s.k != 0) out += " " + format_subset(s.k);
  return out;
}

// "<elements> : <value>" lines covering every subset exactly once.
template <typename T, typename ParseValue>
std::vector<T> parse_subset_table(const std::vector<Line>& lines, std::size_t begin,
                                  int n, ParseValue&& parse_value) {
  std::size_t size = std::size_t{1} << n;
  std::vector<T> values(size);
  std::vector<bool> seen(size, false);
  for (std::size_t l = begin; l < lines.size(); ++l) {
    const Line& line = lines[l];
    const auto& tok = line.tokens;
    std::size_t colon = 0;
    while (colon < tok.size() && tok[colon] != ":") ++colon;
    if (colon + 2 != tok.size()) {
      throw ParseError(line.number, "expected '<elements> : <value>'");
    }
    Subset s = parse_elements(tok, 0, colon, n, line.number);
    if (seen[s]) throw ParseError(line.number, "subset listed twice");
    seen[s] = true;
    values[s] = parse_value(tok.back(), line.number);
  }
  for (std::size_t s = 0; s < size; ++s) {
    if (!seen[s]) {
      throw ParseError(0, "no value given for subset " +
                              brace_subset(static_cast<Subset>(s)));
    }
  }
  return values;
}

Rational rational_at(const std::string& token, int line) {
  try {
    return parse_rational(token);
  } catch (const ParseError& e) {
    throw ParseError(line, e.what());
  }
}

std::vector<std::vector<Rational>> parse_rows(const std::vector<Line>& lines,
                                              int rows, int cols) {
  if (static_cast<int>(lines.size()) - 1 != rows) {
    throw ParseError(0, "expected " + std::to_string(rows) + " matrix rows, got " +
                            std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Rational>> out;
  for (int r = 0; r < rows; ++r) {
    const Line& line = lines[r + 1];
    if (static_cast<int>(line.tokens.size()) != cols) {
      throw ParseError(line.number, "expected " + std::to_string(cols) + " entries");
    }
    std::vector<Rational> row;
    for (const auto& tok : line.tokens) row.push_back(rational_at(tok, line.number));
    out.push_back(std::move(row));
  }
  return out;
}

std::string subset_table_line(Subset s, const std::string& value) {
  std::string elems = format_subset(s);
  return (elems.empty() ? ":" : elems + " :") + " " + value + "\n";
}

}  // namespace

std::string_view file_kind_name(FileKind k) {
  switch (k) {
    case FileKind::kCi: return "ci";
    case FileKind::kOci: return "oci";
    case FileKind::kMatroid: return "matroid";
    case FileKind::kSetFunction: return "setfn";
    case FileKind::kSignedCircuits: return "signed-circuits";
    case FileKind::kChirotope: return "chirotope";
    case FileKind::kMatrix: return "matrix";
    case FileKind::kVectors: return "vectors";
  }
  return "?";
}

FileKind detect_kind(std::string_view text) {
  Header h = read_header(split_lines(text));
  for (FileKind k : {FileKind::kCi, FileKind::kOci, FileKind::kMatroid,
                     FileKind::kSetFunction, FileKind::kSignedCircuits,
                     FileKind::kChirotope, FileKind::kMatrix, FileKind::kVectors}) {
    if (h.kind == file_kind_name(k)) return k;
  }
  throw ParseError(h.line, "unknown file kind '" + h.kind + "'");
}

CIStructure parse_ci(std::string_view text) {
  auto lines = split_lines(text);
  Header h = expect_header(lines, "ci", {"n"});
  int n = ground_param(h);
  CIStructure g(n);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    CIStatement s = parse_statement(lines[l], 0, n);
    if (lines[l].tokens.size() < 3) throw ParseError(lines[l].number, "short line");
    if (g.contains(s)) {
      throw ParseError(lines[l].number, "duplicate statement " + to_string(s));
    }
    g.insert(s);
  }
  return g;
}

std::string write_ci(const CIStructure& g) {
  std::string out = "ci n=" + std::to_string(g.ground_size()) + "\n";
  for (const CIStatement& s : g.statements()) out += statement_line(s) + "\n";
  return out;
}

OrientedCIStructure parse_oci(std::string_view text) {
  auto lines = split_lines(text);
  Header h = expect_header(lines, "oci", {"n"});
  int n = ground_param(h);
  OrientedCIStructure sigma(n);
  CIStructure seen(n);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    const std::string& sign = line.tokens[0];
    if (sign != "+" && sign != "-") {
      throw ParseError(line.number, "expected '+' or '-' before the statement");
    }
    CIStatement s = parse_statement(line, 1, n);
    if (seen.contains(s)) {
      throw ParseError(line.number, "duplicate statement " + to_string(s));
    }
    seen.insert(s);
    sigma.set(s, sign == "+" ? 1 : -1);
  }
  return sigma;
}

std::string write_oci(const OrientedCIStructure& sigma) {
  std::string out = "oci n=" + std::to_string(sigma.ground_size()) + "\n";
  const StatementIndex& idx = sigma.index();
  for (std::size_t s = 0; s < idx.size(); ++s) {
    int v = sigma.sign_index(s);
    if (v == 0) continue;
    out += (v > 0 ? "+ " : "- ") + statement_line(idx.statement(s)) + "\n";
  }
  return out;
}

Matroid parse_matroid(std::string_view text) {
  auto lines = split_lines(text);
  Header h = expect_header(lines, "matroid", {"n"});
  int n = ground_param(h);
  if (lines.size() < 2 || lines[1].tokens.size() != 1 ||
      (lines[1].tokens[0] != "rank" && lines[1].tokens[0] != "bases")) {
    throw ParseError(lines.size() > 1 ? lines[1].number : h.line,
                     "expected 'rank' or 'bases' after the header");
  }
  if (lines[1].tokens[0] == "rank") {
    auto values = parse_subset_table<int>(lines, 2, n, parse_int);
    return Matroid(RankFunction(n, std::move(values)));
  }
  std::vector<Subset> bases;
  for (std::size_t l = 2; l < lines.size(); ++l) {
    const auto& tok = lines[l].tokens;
    // A lone "-" is the empty basis of a rank-0 matroid.
    Subset b = (tok.size() == 1 && tok[0] == "-")
                   ? 0
                   : parse_elements(tok, 0, tok.size(), n, lines[l].number);
    bases.push_back(b);
  }
  return Matroid::from_bases(n, bases);
}

std::string write_matroid(const Matroid& m) {
  int n = m.ground_size();
  std::string out = "matroid n=" + std::to_string(n) + "\nrank\n";
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    out += subset_table_line(s, std::to_string(m.rank(s)));
  }
  return out;
}

std::string write_matroid_bases(const Matroid& m) {
  std::string out = "matroid n=" + std::to_string(m.ground_size()) + "\nbases\n";
  for (Subset b : m.bases()) out += (b == 0 ? std::string("-") : format_subset(b)) + "\n";
  return out;
}

SetFunction parse_set_function(std::string_view text) {
  auto lines = split_lines(text);
  Header h = expect_header(lines, "setfn", {"n"});
  int n = ground_param(h);
  return SetFunction(n, parse_subset_table<Rational>(lines, 1, n, rational_at));
}

std::string write_set_function(const SetFunction& h) {
  int n = h.ground_size();
  std::string out = "setfn n=" + std::to_string(n) + "\n";
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    out += subset_table_line(s, format_rational(h(s)));
  }
  return out;
}

SignedCircuitSet parse_signed_circuits(std::string_view text) {
  auto lines = split_lines(text);
  Header h = expect_header(lines, "signed-circuits", {"n"});
  int n = ground_param(h);
  std::vector<SignedSet> reps;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    SignedSet x;
    int mode = 0;
    for (const std::string& tok : line.tokens) {
      if (tok == "+") {
        mode = 1;
      } else if (tok == "-") {
        mode = -1;
      } else {
        if (mode == 0) throw ParseError(line.number, "element before a '+' or '-' marker");
        int e = parse_element(tok, n, line.number);
        if (contains(x.support(), e)) {
          throw ParseError(line.number, "element " + tok + " repeated");
        }
        (mode > 0 ? x.positive : x.negative) |= bit(e);
      }
    }
    if (x.support() == 0) throw ParseError(line.number, "empty signed set");
    for (const SignedSet& y : reps) {
      if (y == x || y == -x) {
        throw ParseError(line.number, "signed set listed twice (up to sign)");
      }
    }
    reps.push_back(x);
  }
  return SignedCircuitSet::symmetric(n, reps);
}

std::string write_signed_circuits(const SignedCircuitSet& c) {
  std::string out = "signed-circuits n=" + std::to_string(c.ground_size()) + "\n";
  for (const SignedSet& x : c.representatives()) out += format_signed_set(x) + "\n";
  return out;
}

Chirotope parse_chirotope(std::string_view text) {
  auto lines = split_lines(text);
  Header h = expect_header(lines, "chirotope", {"n", "r"});
  int n = ground_param(h);
  int r = h.params.at("r");
  if (r < 1 || r > n) throw ParseError(h.line, "r must satisfy 1 <= r <= n");
  Chirotope chi(n, r, std::vector<signed char>(std::size_t{1} << n, 0));
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    const auto& tok = line.tokens;
    if (static_cast<int>(tok.size()) != r + 1 || (tok.back() != "+" && tok.back() != "-")) {
      throw ParseError(line.number, "expected r elements followed by '+' or '-'");
    }
    std::vector<int> tuple;
    Subset s = 0;
    int inversions = 0;
    for (int t = 0; t < r; ++t) {
      int e = parse_element(tok[t], n, line.number);
      if (contains(s, e)) throw ParseError(line.number, "repeated element in tuple");
      for (int prev : tuple) {
        if (prev > e) ++inversions;
      }
      tuple.push_back(e);
      s |= bit(e);
    }
    if (seen[s]) throw ParseError(line.number, "tuple listed twice");
    seen[s] = true;
    int v = tok.back() == "+" ? 1 : -1;
    chi.set(s, inversions % 2 == 0 ? v : -v);
  }
  return chi;
}

std::string write_chirotope(const Chirotope& chi) {
  std::string out = "chirotope n=" + std::to_string(chi.ground_size()) +
                    " r=" + std::to_string(chi.rank()) + "\n";
  for (Subset s : chi.support()) {
    out += format_subset(s) + (chi.sign(s) > 0 ? " +" : " -") + "\n";
  }
  return out;
}

RationalMatrix parse_matrix(std::string_view text) {
  auto lines = split_lines(text);
  Header h = expect_header(lines, "matrix", {"n"});
  int n = ground_param(h);
  auto rows = parse_rows(lines, n, n);
  std::vector<Rational> flat;
  for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return RationalMatrix(n, n, std::move(flat));
}

std::string write_matrix(const RationalMatrix& m) {
  std::string out = "matrix n=" + std::to_string(m.rows()) + "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += format_rational(m(r, c));
    }
    out += '\n';
  }
  return out;
}

VectorConfiguration parse_vectors(std::string_view text) {
  auto lines = split_lines(text);
  Header h = expect_header(lines, "vectors", {"d", "n"});
  int n = ground_param(h);
  int d = h.params.at("d");
  if (d < 1) throw ParseError(h.line, "d must be positive");
  auto rows = parse_rows(lines, d, n);
  std::vector<Rational> flat;
  for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return VectorConfiguration(RationalMatrix(d, n, std::move(flat)));
}

std::string write_vectors(const VectorConfiguration& v) {
  const RationalMatrix& m = v.matrix();
  std::string out = "vectors d=" + std::to_string(m.rows()) +
                    " n=" + std::to_string(m.cols()) + "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += format_rational(m(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace cimat
