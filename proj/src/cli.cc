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

#include "cimat/cli.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cimat/axioms.h"
#include "cimat/ci_structure.h"
#include "cimat/errors.h"
#include "cimat/matroid.h"
#include "cimat/models.h"
#include "cimat/oriented.h"
#include "cimat/text_format.h"

namespace cimat {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << text;
  if (!file) throw Error("write to " + path + " failed");
}

std::vector<std::string> split_tags(const std::string& list) {
  std::vector<std::string> tags;
  std::string cur;
  std::istringstream in(list);
  while (std::getline(in, cur, ',')) {
    if (!cur.empty()) tags.push_back(cur);
  }
  return tags;
}

// "1 3" or "1,3" (1-based) on a ground set of size n.
Subset parse_label_set(const std::string& text, int n) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  Subset s = 0;
  std::string tok;
  while (in >> tok) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw RangeError("bad element '" + tok + "' in --set");
    }
    if (e < 1 || e > n) {
      throw RangeError("element " + tok + " outside 1.." + std::to_string(n));
    }
    s |= bit(e - 1);
  }
  return s;
}

void print_witnesses(const std::vector<ViolationWitness>& ws, std::ostream& out) {
  for (const auto& w : ws) {
    out << axiom_name(w.axiom) << " violated: " << w.detail << '\n';
    out << "! " << format_witness(w) << '\n';
  }
}

// Lists statement-level differences; returns true iff equal.
bool diff_ci(const CIStructure& want, const CIStructure& got, std::ostream& out) {
  if (want.ground_size() != got.ground_size()) {
    out << "! ground size " << want.ground_size() << " vs " << got.ground_size() << '\n';
    return false;
  }
  bool same = true;
  const StatementIndex& idx = want.index();
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (want.contains_index(s) == got.contains_index(s)) continue;
    same = false;
    out << "! " << (want.contains_index(s) ? "missing " : "extra ")
        << to_string(idx.statement(s)) << '\n';
  }
  return same;
}

bool diff_oci(const OrientedCIStructure& want, const OrientedCIStructure& got,
              std::ostream& out) {
  if (want.ground_size() != got.ground_size()) {
    out << "! ground size " << want.ground_size() << " vs " << got.ground_size() << '\n';
    return false;
  }
  bool same = true;
  const StatementIndex& idx = want.index();
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (want.sign_index(s) == got.sign_index(s)) continue;
    same = false;
    out << "! sign " << to_string(idx.statement(s)) << ' ' << want.sign_index(s)
        << " vs " << got.sign_index(s) << '\n';
  }
  return same;
}

bool diff_circuits(const SignedCircuitSet& want, const SignedCircuitSet& got,
                   std::ostream& out) {
  std::vector<SignedSet> a = want.representatives();
  std::vector<SignedSet> b = got.representatives();
  bool same = want.ground_size() == got.ground_size();
  for (const SignedSet& x : a) {
    if (!std::binary_search(b.begin(), b.end(), x)) {
      out << "! missing " << format_signed_set(x) << '\n';
      same = false;
    }
  }
  for (const SignedSet& x : b) {
    if (!std::binary_search(a.begin(), a.end(), x)) {
      out << "! extra " << format_signed_set(x) << '\n';
      same = false;
    }
  }
  return same;
}

// Throws ValidationError (exit 2) listing every signed-circuit axiom failure.
void require_circuit_axioms(const SignedCircuitSet& c, std::ostream& out) {
  auto failures = check_circuit_axioms(c);
  if (failures.empty()) return;
  for (const auto& f : failures) {
    out << "! " << f.axiom << ' ' << format_signed_set(f.x) << " ; "
        << format_signed_set(f.y) << " : " << f.detail << '\n';
  }
  throw ValidationError("input is not a signed circuit set (" +
                        std::to_string(failures.size()) + " failures)");
}

void require_sigma(const OrientedCIStructure& sigma, std::ostream& out) {
  auto ws = check_oci(sigma);
  if (ws.empty()) return;
  print_witnesses(ws, out);
  throw AxiomError("oriented CI-structure violates " + std::string(axiom_name(ws[0].axiom)));
}

void require_chirotope(const Chirotope& chi, std::ostream& out) {
  auto problems = chirotope_validate(chi);
  if (problems.empty()) return;
  for (const auto& p : problems) out << "! " << p << '\n';
  throw ValidationError("input is not a chirotope");
}

// --- check -----------------------------------------------------------------

struct CheckOptions {
  std::string input;
  std::string axioms;
};

int run_check(const CheckOptions& opt, std::ostream& out) {
  std::string text = read_file(opt.input);
  FileKind kind = detect_kind(text);
  if (kind != FileKind::kCi && kind != FileKind::kOci) {
    throw ParseError(1, "check expects a ci or oci file");
  }
  std::vector<std::string> tags = split_tags(opt.axioms);
  if (tags.empty()) tags = {kind == FileKind::kCi ? "matroid-ci" : "oci"};
  static const std::set<std::string> known{"sg", "mci", "gaussoid", "oci", "matroid-ci"};
  for (const auto& t : tags) {
    if (known.count(t) == 0) throw RangeError("unknown axiom tag '" + t + "'");
  }

  std::optional<OrientedCIStructure> sigma;
  CIStructure g(0);
  if (kind == FileKind::kCi) {
    g = parse_ci(text);
  } else {
    sigma = parse_oci(text);
    // Structural tags on an oci file refer to its zero set.
    g = sigma->zero_set();
  }

  bool clean = true;
  std::set<std::string> done;
  auto run = [&](const std::string& name, auto&& checker) {
    if (!done.insert(name).second) return;
    auto ws = checker();
    out << name << ": " << (ws.empty() ? "pass" : std::to_string(ws.size()) + " violations")
        << '\n';
    print_witnesses(ws, out);
    if (!ws.empty()) clean = false;
  };
  for (const auto& t : tags) {
    if (t == "sg" || t == "matroid-ci") run("SG", [&] { return check_semigraphoid(g); });
    if (t == "mci" || t == "matroid-ci") run("MCI", [&] { return check_mci(g); });
    if (t == "gaussoid") run("gaussoid", [&] { return check_gaussoid(g); });
    if (t == "oci") {
      if (!sigma) throw RangeError("axiom tag 'oci' needs an oci file");
      run("OCI", [&] { return check_oci(*sigma); });
    }
  }
  return clean ? kExitPass : kExitViolations;
}

// --- convert ---------------------------------------------------------------

struct ConvertOptions {
  std::string input;
  std::string target;
  std::string output;
  bool verify = false;
};

// Re-parses `text` and compares with the in-memory result.
template <typename T, typename Parse>
void check_serialization(const std::string& text, const T& value, Parse&& parse) {
  if (!(parse(text) == value)) {
    throw ConsistencyError("serialized output does not re-parse to the same object");
  }
}

int run_convert(const ConvertOptions& opt, std::ostream& out) {
  std::string text = read_file(opt.input);
  FileKind kind = detect_kind(text);
  std::string from(file_kind_name(kind));
  const std::string& to = opt.target;
  bool verified = true;
  std::string result;

  if (kind == FileKind::kCi && to == "matroid") {
    CIStructure g = parse_ci(text);
    Matroid m = matroid_from_ci(g);
    result = write_matroid(m);
    check_serialization(result, m, parse_matroid);
    if (opt.verify) verified = diff_ci(g, ci_of_matroid(m), out);
  } else if (kind == FileKind::kMatroid && to == "ci") {
    Matroid m = parse_matroid(text);
    CIStructure g = ci_of_matroid(m);
    result = write_ci(g);
    check_serialization(result, g, parse_ci);
    if (opt.verify) {
      verified = matroid_from_ci(g) == m;
      if (!verified) out << "! rank functions differ\n";
    }
  } else if (kind == FileKind::kSignedCircuits && to == "oci") {
    SignedCircuitSet c = parse_signed_circuits(text);
    require_circuit_axioms(c, out);
    OrientedCIStructure sigma = sigma_of_oriented_matroid(c);
    result = write_oci(sigma);
    check_serialization(result, sigma, parse_oci);
    if (opt.verify) verified = diff_circuits(c, oriented_matroid_from_sigma(sigma), out);
  } else if (kind == FileKind::kOci && to == "signed-circuits") {
    OrientedCIStructure sigma = parse_oci(text);
    require_sigma(sigma, out);
    SignedCircuitSet c = oriented_matroid_from_sigma(sigma);
    result = write_signed_circuits(c);
    check_serialization(result, c, parse_signed_circuits);
    if (opt.verify) verified = diff_oci(sigma, sigma_of_oriented_matroid(c), out);
  } else if (kind == FileKind::kChirotope && to == "oci") {
    Chirotope chi = parse_chirotope(text);
    require_chirotope(chi, out);
    OrientedCIStructure sigma = sigma_from_chirotope(chi);
    result = write_oci(sigma);
    check_serialization(result, sigma, parse_oci);
    if (opt.verify) {
      // No inverse to χ itself; go through the circuits and back.
      verified = diff_oci(sigma, sigma_of_oriented_matroid(oriented_matroid_from_sigma(sigma)),
                          out);
    }
  } else if (kind == FileKind::kSetFunction && to == "ci") {
    CIStructure g = semimatroid_of_set_function(parse_set_function(text));
    result = write_ci(g);
    check_serialization(result, g, parse_ci);
    if (opt.verify) {
      auto ws = check_semigraphoid(g);
      print_witnesses(ws, out);
      verified = ws.empty();
    }
  } else if (kind == FileKind::kMatrix && to == "ci") {
    CIStructure g = gaussian_ci(parse_matrix(text));
    result = write_ci(g);
    check_serialization(result, g, parse_ci);
    if (opt.verify) {
      auto ws = check_gaussoid(g);
      print_witnesses(ws, out);
      verified = ws.empty();
    }
  } else if (kind == FileKind::kVectors && (to == "chirotope" || to == "signed-circuits")) {
    VectorConfiguration v = parse_vectors(text);
    Chirotope chi = chirotope_from_vectors(v);
    SignedCircuitSet c = signed_circuits_from_vectors(v);
    if (to == "chirotope") {
      result = write_chirotope(chi);
      check_serialization(result, chi, parse_chirotope);
    } else {
      result = write_signed_circuits(c);
      check_serialization(result, c, parse_signed_circuits);
    }
    if (opt.verify) {
      verified = diff_oci(sigma_of_oriented_matroid(c), sigma_from_chirotope(chi), out);
    }
  } else {
    throw RangeError("unsupported conversion " + from + " -> " + to);
  }

  emit(result, opt.output, out);
  if (opt.verify) {
    out << (opt.output.empty() ? "# " : "") << "verify: " << (verified ? "round trip confirmed" : "MISMATCH")
        << '\n';
  }
  return verified ? kExitPass : kExitViolations;
}

// --- op --------------------------------------------------------------------

struct OpOptions {
  std::string name;
  std::vector<std::string> inputs;
  std::string set;
  std::string output;
};

std::string origin_comment(const std::vector<int>& original) {
  std::string line = "# original labels:";
  for (int e : original) line += " " + std::to_string(e + 1);
  return line + "\n";
}

std::vector<int> kept_labels(int n, Subset removed) {
  return elements_of(full_set(n) & ~removed);
}

int run_op(const OpOptions& opt, std::ostream& out) {
  static const std::set<std::string> binary{"direct-sum", "isomorphic"};
  std::size_t want = binary.count(opt.name) ? 2 : 1;
  if (opt.inputs.size() != want) {
    throw RangeError("op " + opt.name + " takes " + std::to_string(want) + " input file(s)");
  }
  std::vector<std::string> texts;
  for (const auto& path : opt.inputs) texts.push_back(read_file(path));
  FileKind kind = detect_kind(texts[0]);
  if (kind != FileKind::kCi && kind != FileKind::kMatroid) {
    throw ParseError(1, "op expects ci or matroid files");
  }
  for (const auto& t : texts) {
    if (detect_kind(t) != kind) throw ParseError(1, "op inputs must be of the same kind");
  }
  bool is_ci = kind == FileKind::kCi;

  if (opt.name == "delete" || opt.name == "contract") {
    bool del = opt.name == "delete";
    if (is_ci) {
      CIStructure g = parse_ci(texts[0]);
      Subset a = parse_label_set(opt.set, g.ground_size());
      ReducedStructure r = del ? deletion(g, a) : contraction(g, a);
      emit(origin_comment(r.original) + write_ci(r.structure), opt.output, out);
    } else {
      Matroid m = parse_matroid(texts[0]);
      Subset a = parse_label_set(opt.set, m.ground_size());
      Matroid r = del ? matroid_delete(m, a) : matroid_contract(m, a);
      emit(origin_comment(kept_labels(m.ground_size(), a)) + write_matroid(r), opt.output,
           out);
    }
    return kExitPass;
  }
  if (opt.name == "dual") {
    emit(is_ci ? write_ci(dual(parse_ci(texts[0])))
               : write_matroid(matroid_dual(parse_matroid(texts[0]))),
         opt.output, out);
    return kExitPass;
  }
  if (opt.name == "direct-sum") {
    emit(is_ci ? write_ci(direct_sum(parse_ci(texts[0]), parse_ci(texts[1])))
               : write_matroid(
                     matroid_direct_sum(parse_matroid(texts[0]), parse_matroid(texts[1]))),
         opt.output, out);
    return kExitPass;
  }
  if (opt.name == "minors") {
    CIStructure g = is_ci ? parse_ci(texts[0]) : ci_of_matroid(parse_matroid(texts[0]));
    std::string text;
    for (const Minor& m : minors(g)) {
      text += "# delete {" + format_subset(m.deleted) + "} contract {" +
              format_subset(m.contracted) + "}" + (is_matroid_ci(m.structure) ? "" : " (not SG+MCI)") +
              "\n" + write_ci(m.structure);
    }
    emit(text, opt.output, out);
    return kExitPass;
  }
  if (opt.name == "isomorphic") {
    std::optional<Permutation> perm;
    if (is_ci) {
      perm = isomorphic(parse_ci(texts[0]), parse_ci(texts[1]));
    } else {
      perm = matroid_isomorphic(parse_matroid(texts[0]), parse_matroid(texts[1]));
    }
    if (!perm) {
      out << "not isomorphic\n";
      return kExitViolations;
    }
    out << "isomorphic\n!";
    for (std::size_t e = 0; e < perm->size(); ++e) {
      out << ' ' << e + 1 << "->" << (*perm)[e] + 1;
    }
    out << '\n';
    return kExitPass;
  }
  throw RangeError("unknown op '" + opt.name + "'");
}

// --- enumerate -------------------------------------------------------------

struct EnumerateOptions {
  std::string kind;
  int n = 0;
  bool emit = false;
  unsigned workers = 0;
  std::string output;
};

int run_enumerate(const EnumerateOptions& opt, std::ostream& out) {
  std::string text;
  std::ostringstream cross;
  bool agree = true;
  std::size_t count = 0;
  if (opt.kind == "matroid-ci") {
    if (opt.n < 0 || opt.n > kMaxMatroidCiScan) {
      throw CapacityError("matroid-ci scan supports n <= " + std::to_string(kMaxMatroidCiScan));
    }
    auto found = enumerate_matroid_ci(opt.n, opt.workers);
    count = found.size();
    if (opt.n >= 1) {
      std::size_t oracle = enumerate_loopless_matroids(opt.n).size();
      cross << "loopless matroids (independent route): " << oracle << '\n';
      agree = oracle == count;
    }
    if (opt.emit) {
      for (const auto& g : found) text += write_ci(g);
    }
  } else if (opt.kind == "matroids") {
    auto found = enumerate_loopless_matroids(opt.n);
    count = found.size();
    if (opt.n <= kMaxMatroidCiScan) {
      std::size_t oracle = enumerate_matroid_ci(opt.n, opt.workers).size();
      cross << "SG+MCI structures (independent route): " << oracle << '\n';
      agree = oracle == count;
    }
    if (opt.emit) {
      for (const auto& m : found) text += write_matroid_bases(m);
    }
  } else if (opt.kind == "gaussoid-matroids") {
    if (opt.n < 1 || opt.n > 4) throw CapacityError("gaussoid-matroids supports 1 <= n <= 4");
    for (const Matroid& m : enumerate_loopless_matroids(opt.n)) {
      bool structural = gaussoid_matroid_decision(m);
      bool axiomatic = is_gaussoid(ci_of_matroid(m));
      if (structural != axiomatic) {
        agree = false;
        cross << "! disagreement on matroid with bases";
        for (Subset b : m.bases()) cross << " {" << format_subset(b) << "}";
        cross << '\n';
      }
      if (!axiomatic) continue;
      ++count;
      if (opt.emit) text += write_matroid_bases(m);
    }
  } else {
    throw RangeError("unknown enumeration kind '" + opt.kind + "'");
  }
  out << opt.kind << " n=" << opt.n << ": " << count << '\n' << cross.str();
  if (!agree) out << "routes disagree\n";
  if (opt.emit) emit(text, opt.output, out);
  return agree ? kExitPass : kExitViolations;
}

// --- demo ------------------------------------------------------------------

struct DemoOptions {
  std::string family;
  int m = 0;
  std::string output;
};

std::string paren_statement(int i, int j, Subset k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + " | " +
         (k == 0 ? std::string("∅") : format_subset(k)) + ")";
}

int run_demo(const DemoOptions& opt, std::ostream& out) {
  if (opt.family != "gm") throw RangeError("unknown demo family '" + opt.family + "'");
  if (opt.m < 4 || opt.m > 6) throw RangeError("demo gm needs 4 <= m <= 6");
  CIStructure g = g_family(opt.m);
  if (!opt.output.empty()) emit(write_ci(g), opt.output, out);
  out << "G_" << opt.m << ": " << g.member_count() << " of " << g.statement_count()
      << " statements\n";

  bool as_expected = true;
  auto ws = check_mci(g);
  Subset rest = full_set(opt.m) & ~make_subset({0, 1, 2});
  auto it = std::find_if(ws.begin(), ws.end(), [&](const ViolationWitness& w) {
    return w.elements == std::vector<int>{0, 1, 2} && w.k == 0 && w.l == rest;
  });
  if (is_matroid_ci(g) || it == ws.end()) {
    out << "unexpected: no MCI witness (1,2 | ∅) vs (1,3 | ...)\n";
    as_expected = false;
  } else {
    out << "not a matroid: MCI witness " << paren_statement(0, 1, 0) << " vs "
        << paren_statement(0, 2, bit(1) | rest) << '\n';
    out << "! " << format_witness(*it) << '\n';
  }
  if (!satisfies_semigraphoid(g)) {
    out << "unexpected: SG fails\n";
    as_expected = false;
  }

  int passing = 0;
  for (int e = 0; e < opt.m; ++e) {
    for (bool del : {true, false}) {
      CIStructure minor_g = del ? minor(g, bit(e), 0) : minor(g, 0, bit(e));
      bool ok = is_matroid_ci(minor_g);
      passing += ok ? 1 : 0;
      as_expected = as_expected && ok;
      out << (del ? "delete " : "contract ") << e + 1 << ": " << (ok ? "pass" : "FAIL")
          << '\n';
    }
  }
  out << passing << " of " << 2 * opt.m << " single-element minors satisfy SG+MCI\n";
  return as_expected ? kExitPass : kExitViolations;
}

// --- realize ---------------------------------------------------------------

struct RealizeOptions {
  std::string input;
  std::string output;
};

int run_realize(const RealizeOptions& opt, std::ostream& out) {
  VectorConfiguration v = parse_vectors(read_file(opt.input));
  Chirotope chi = chirotope_from_vectors(v);
  SignedCircuitSet c = signed_circuits_from_vectors(v);
  OrientedCIStructure via_circuits = sigma_of_oriented_matroid(c);
  OrientedCIStructure via_chirotope = sigma_from_chirotope(chi);
  emit(write_chirotope(chi) + write_signed_circuits(c) + write_oci(via_circuits), opt.output,
       out);
  std::ostringstream diffs;
  bool same = diff_oci(via_circuits, via_chirotope, diffs);
  out << (opt.output.empty() ? "# " : "")
      << (same ? "chirotope and signed-circuit routes agree" : "routes DISAGREE") << '\n'
      << diffs.str();
  return same ? kExitPass : kExitViolations;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conditional independence structures of matroids and oriented matroids"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Check CI axioms on a ci or oci file");
  check_cmd->add_option("input", check.input, "ci or oci file")->required();
  check_cmd->add_option("--axioms", check.axioms,
                        "Comma-separated tags: sg, mci, gaussoid, oci, matroid-ci");

  ConvertOptions convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between representations");
  convert_cmd->add_option("input", convert.input, "Input file")->required();
  convert_cmd->add_option("--to", convert.target, "Target format")->required();
  convert_cmd->add_option("-o,--output", convert.output, "Output file (default stdout)");
  convert_cmd->add_flag("--verify", convert.verify, "Run the inverse conversion and compare");

  OpOptions op;
  auto* op_cmd = app.add_subcommand("op", "Minors, duality, direct sums, isomorphism");
  op_cmd->add_option("name", op.name, "delete | contract | dual | direct-sum | minors | isomorphic")
      ->required();
  op_cmd->add_option("inputs", op.inputs, "ci or matroid file(s)")->required();
  op_cmd->add_option("--set", op.set, "Elements for delete/contract, e.g. \"1 3\"");
  op_cmd->add_option("-o,--output", op.output, "Output file (default stdout)");

  EnumerateOptions en;
  auto* en_cmd = app.add_subcommand("enumerate", "Exhaustive censuses");
  en_cmd->add_option("--kind", en.kind, "matroid-ci | matroids | gaussoid-matroids")
      ->required();
  en_cmd->add_option("--n", en.n, "Ground set size")->required();
  en_cmd->add_flag("--emit", en.emit, "Write every object found");
  en_cmd->add_option("--workers", en.workers, "Worker threads (0 = hardware)");
  en_cmd->add_option("-o,--output", en.output, "Output file for --emit");

  DemoOptions demo;
  auto* demo_cmd = app.add_subcommand("demo", "The infinite family of excluded minors");
  demo_cmd->add_option("family", demo.family, "gm")->required();
  demo_cmd->add_option("--m", demo.m, "Ground set size, 4..6")->required();
  demo_cmd->add_option("-o,--output", demo.output, "Write G_m here");

  RealizeOptions realize;
  auto* realize_cmd =
      app.add_subcommand("realize", "Chirotope, signed circuits and oci of a vectors file");
  realize_cmd->add_option("input", realize.input, "vectors file")->required();
  realize_cmd->add_option("-o,--output", realize.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (*check_cmd) return run_check(check, out);
    if (*convert_cmd) return run_convert(convert, out);
    if (*op_cmd) return run_op(op, out);
    if (*en_cmd) return run_enumerate(en, out);
    if (*demo_cmd) return run_demo(demo, out);
    if (*realize_cmd) return run_realize(realize, out);
  } catch (const LoopError& e) {
    err << "error: " << e.what() << " (element " << e.element() << ")\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace cimat
