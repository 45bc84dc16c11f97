// Copyright 2026 The rzpencil Authors
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

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "rzpencil/catalog.h"
#include "rzpencil/clifford.h"
#include "rzpencil/io.h"
#include "rzpencil/obstruction.h"
#include "rzpencil/pencil.h"
#include "rzpencil/realzero.h"
#include "rzpencil/reduction.h"

namespace rzpencil {
namespace {

struct SeedOption {
  std::string text;
  std::vector<CLI::Option*> options;

  void attach(CLI::App* app) {
    options.push_back(app->add_option("--seed", text, "Random seed (overrides RZPENCIL_SEED)"));
  }
  std::uint64_t value() const {
    const bool given = std::any_of(options.begin(), options.end(),
                                   [](const CLI::Option* opt) { return opt->count() > 0; });
    if (!given) return resolve_seed();
    try {
      std::size_t used = 0;
      const auto v = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing");
      return resolve_seed(v);
    } catch (const std::exception&) {
      throw FormatError("invalid seed '" + text + "'");
    }
  }
};

PolyFile load_poly(const std::string& path) { return read_poly(read_file(path)); }
Pencil load_pencil(const std::string& path) { return read_pencil(read_file(path)); }

// A file path, or an expression whose variables start at x1 unless x0 occurs.
PolyFile poly_argument(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_poly(arg);
  static const std::regex has_x0(R"((^|[^A-Za-z0-9_])x0([^0-9]|$))");
  ParseOptions options;
  options.base = std::regex_search(arg, has_x0) ? 0 : 1;
  PolyFile out;
  out.base = options.base;
  const int nvars = infer_nvars(arg, options);
  out.poly = parse_poly(arg, nvars, options);
  return out;
}

std::vector<Quad> parse_point(const std::string& text) {
  std::vector<Quad> a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) a.push_back(parse_real_constant(item));
  return a;
}

std::vector<double> parse_double_point(const std::string& text) {
  std::vector<double> a;
  for (const auto& q : parse_point(text)) a.push_back(q.to_double());
  return a;
}

void emit_commented(std::ostream& out, const Transcript& t) {
  for (const auto& [k, v] : t.entries()) out << "# " << k << ": " << v << "\n";
}

int identity_exit(const IdentityVerdict& v) {
  if (!v.pass) return kExitFail;
  return v.mode == IdentityVerdict::Mode::kProved ? kExitOk : kExitInconclusive;
}

struct Options {
  std::string input;
  std::string second;
  std::string output;
  std::string target;
  std::string point;
  std::string variant = "standard";
  std::string kind;
  std::string r;
  std::vector<std::string> hints;
  bool exact = false;
  bool cone = false;
  bool assert_no_line = false;
  bool assert_cone = false;
  bool list = false;
  int sampled = 0;
  int power = 1;
  int trials = 200;
  int words = 4;
  int samples = kDefaultRzSamples;
  long n = 0;
  long d = 0;
  SeedOption seed;
};

void write_or_print(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty()) {
    out << contents;
  } else {
    write_file(path, contents);
  }
}

int run_check_rz(const Options& o, std::ostream& out) {
  const PolyFile f = poly_argument(o.input);
  RzOptions options;
  options.seed = o.seed.value();
  if (o.exact) options.strategy = RzOptions::Strategy::kQuadratic;
  if (o.sampled > 0) {
    options.strategy = RzOptions::Strategy::kSampled;
    options.samples = o.sampled;
  }
  const RzVerdict v = is_real_zero(f.poly, options);
  Transcript t;
  t.add("polynomial", to_string(f.poly, f.base));
  describe(t, v);
  out << t.str();
  if (!v.is_rz) return kExitFail;
  return v.mode == RzVerdict::Mode::kExact ? kExitOk : kExitInconclusive;
}

int run_det(const Options& o, std::ostream& out) {
  const Pencil p = load_pencil(o.input);
  if (!o.target.empty()) {
    const PolyFile target = load_poly(o.target);
    const IdentityVerdict v = verify_identity(p, target.poly, o.power, o.trials, o.seed.value());
    Transcript t;
    t.add("power", o.power);
    describe(t, v);
    out << t.str();
    return identity_exit(v);
  }
  const Poly det = det_poly(p);
  Transcript t;
  t.add("size", p.size());
  t.add("mode", "exact");
  emit_commented(out, t);
  out << write_poly(det);
  return kExitOk;
}

// First non-comment token.
bool is_pencil_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line.compare(first, 6, "pencil") == 0;
  }
  return false;
}

int run_member(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.input);
  const std::vector<Quad> a = parse_point(o.point);
  bool member = false;
  Transcript t;
  if (is_pencil_text(text)) {
    const Pencil p = read_pencil(text);
    if (static_cast<int>(a.size()) != p.nvars()) throw DimensionError("point has the wrong length");
    if (p.is_exact()) {
      member = membership(p, a);
      t.add("mode", "exact");
    } else {
      std::vector<double> ad;
      for (const auto& x : a) ad.push_back(x.to_double());
      member = membership(p, ad);
      t.add("mode", "numeric");
      t.add("tau_psd", kTauPsd);
    }
    t.add("set", "spectrahedron");
  } else {
    const PolyFile f = read_poly(text);
    if (static_cast<int>(a.size()) != f.poly.nvars()) {
      throw DimensionError("point has the wrong length");
    }
    member = rigid_membership(f.poly, a);
    t.add("mode", "exact");
    t.add("set", "rigidly-convex");
  }
  t.add("point", format_point(a));
  t.add("member", member);
  out << t.str();
  return member ? kExitOk : kExitFail;
}

int run_reduce(const Options& o, std::ostream& out) {
  const Pencil p = load_pencil(o.input);
  const std::uint64_t seed = o.seed.value();
  ReductionResult r;
  Transcript t;
  if (o.cone) {
    ConeOptions options;
    options.seed = seed;
    for (const auto& h : o.hints) options.hints.push_back(parse_double_point(h));
    r = cone_reduce(p, options);
    t.add("method", "cone");
  } else {
    r = common_kernel_reduce(p, seed);
    t.add("method", "common-kernel");
  }
  describe(t, r);
  t.add_seed(seed);
  emit_commented(out, t);
  write_or_print(o.output, write_pencil(r.reduced), out);
  return kExitOk;
}

int run_double(const Options& o, std::ostream& out) {
  const Pencil p = load_pencil(o.input);
  const Pencil doubled = double_to_symmetric(p);
  Transcript t;
  t.add("original_size", p.size());
  t.add("doubled_size", doubled.size());
  emit_commented(out, t);
  write_or_print(o.output, write_pencil(doubled), out);
  return kExitOk;
}

int run_construct(const Options& o, std::ostream& out) {
  const PolyFile f = load_poly(o.input);
  const QuadraticData q = quadratic_form(f.poly);
  Transcript t;
  if (!quadratic_rz_check(q)) {
    t.add("is_rz", false);
    if (const auto w = negative_direction(q.G)) t.add("witness", format_point(*w));
    out << t.str();
    return kExitFail;
  }
  const std::uint64_t seed = o.seed.value();
  const QuadraticConstruction c = construct_quadratic(f.poly, parse_variant(o.variant), o.trials, seed);
  t.add("variant", o.variant);
  t.add("size", c.pencil.size());
  t.add("power", c.power);
  t.add("sqrt", q.C_exact ? "exact" : "numeric");
  describe(t, c.verdict);
  emit_commented(out, t);
  write_or_print(o.output, write_pencil(c.pencil), out);
  return identity_exit(c.verdict);
}

int run_equiv(const Options& o, std::ostream& out) {
  const Pencil a = load_pencil(o.input);
  const Pencil b = load_pencil(o.second);
  const std::uint64_t seed = o.seed.value();
  const EquivalenceVerdict v = unitary_equiv_test(a, b, o.words, o.trials, seed);
  Transcript t;
  describe(t, v);
  t.add_seed(seed);
  out << t.str();
  switch (v.verdict) {
    case Equivalence::kEquivalent:
      return kExitOk;
    case Equivalence::kInequivalent:
      return kExitFail;
    case Equivalence::kInconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

int run_bounds(const Options& o, std::ostream& out) {
  const RepKind kind = parse_rep_kind(o.kind);
  const auto b = min_size_bound(o.n, o.d, kind);
  Transcript t;
  t.add("kind", to_string(kind));
  t.add("n", o.n);
  t.add("d", o.d);
  t.add("hypothesis", "spectrahedron contains no full line");
  if (b) {
    t.add("value", b->value.get_str());
    t.add("bound", "k >= " + std::to_string(b->ceiling));
  } else {
    t.add("bound", "none");
  }
  out << t.str();
  return kExitOk;
}

int run_obstruct(const Options& o, std::ostream& out) {
  const PolyFile f = load_poly(o.input);
  HypothesisFlags flags;
  flags.assert_cone = o.assert_cone;
  flags.assert_no_line = o.assert_no_line;
  flags.samples = o.samples;
  flags.seed = o.seed.value();
  const ObstructionReport r = nonexistence_report(f.poly, flags);
  Transcript t;
  t.add("polynomial", to_string(f.poly, f.base));
  describe(t, r);
  out << t.str();
  return kExitOk;
}

int run_counterexample(const Options& o, std::ostream& out) {
  const PolyFile f = load_poly(o.input);
  const Quad r = parse_real_constant(o.r);
  const Poly q = compact_counterexample(f.poly, r);
  const std::uint64_t seed = o.seed.value();
  const CompactCheck c = check_compact_counterexample(q, r, o.samples, seed);
  Transcript t;
  t.add("r", r.to_string());
  describe(t, c);
  emit_commented(out, t);
  write_or_print(o.output, write_poly(q, f.base), out);
  return c.rz.is_rz && c.bounded ? kExitOk : kExitFail;
}

int run_examples(const Options& o, std::ostream& out) {
  if (o.list || o.input.empty()) {
    for (const auto& name : catalog_names()) out << name << "\n";
    return kExitOk;
  }
  const CatalogEntry e = catalog_lookup(o.input);
  Transcript t;
  t.add("example", e.name);
  t.add("description", e.description);
  if (e.target) {
    t.add("target", to_string(*e.target, e.base));
    t.add("power", e.power);
  }
  emit_commented(out, t);
  if (e.poly) out << write_poly(*e.poly, e.base);
  if (e.pencil) out << write_pencil(*e.pencil);
  return kExitOk;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real zero polynomials and determinantal representations", "rzpencil"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check-rz", "Test the real zero property");
  check->add_option("poly", o.input, "Polynomial file or expression")->required();
  check->add_flag("--exact", o.exact, "Exact decision (degree <= 2)");
  check->add_option("--sampled", o.sampled, "Sampled test with N random directions");
  o.seed.attach(check);

  auto* det = app.add_subcommand("det", "Determinant of a pencil, or verify det = target^r");
  det->add_option("pencil", o.input)->required();
  det->add_flag("--exact", o.exact, "Exact determinant (default)");
  det->add_option("--verify", o.target, "Target polynomial file");
  det->add_option("--power", o.power, "Power r of the target")->check(CLI::PositiveNumber);
  det->add_option("--trials", o.trials, "Random points when the lattice is too large");

  auto* member = app.add_subcommand("member", "Membership in S(M) or S(p)");
  member->add_option("file", o.input, "Pencil or polynomial file")->required();
  member->add_option("--point", o.point, "Comma separated coordinates")->required();

  auto* reduce = app.add_subcommand("reduce", "Reduce the size of a pencil");
  reduce->add_option("pencil", o.input)->required();
  reduce->add_flag("--cone", o.cone, "Split off a zero block along a PSD direction");
  reduce->add_option("--hint", o.hints, "Candidate direction for --cone");
  reduce->add_option("-o,--output", o.output, "Write the reduced pencil here");

  auto* dbl = app.add_subcommand("double", "Symmetric pencil of twice the size");
  dbl->add_option("pencil", o.input)->required();
  dbl->add_option("-o,--output", o.output);

  auto* construct = app.add_subcommand("construct-quadratic", "Pencil for a power of a quadratic");
  construct->add_option("poly", o.input)->required();
  construct->add_option("--variant", o.variant)->check(CLI::IsMember({"standard", "negated"}));
  construct->add_option("--trials", o.trials, "Random points when the lattice is too large");
  construct->add_option("-o,--output", o.output);

  auto* equiv = app.add_subcommand("equiv", "Unitary equivalence of two pencils");
  equiv->add_option("first", o.input)->required();
  equiv->add_option("second", o.second)->required();
  equiv->add_option("--words", o.words, "Maximal trace word length");
  equiv->add_option("--trials", o.trials, "Random words per length");

  auto* bounds = app.add_subcommand("bounds", "Lower bound on the size of a representation");
  bounds->add_option("--n", o.n)->required();
  bounds->add_option("--d", o.d)->required();
  bounds->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"symmetric", "hermitian"}));

  auto* obstruct = app.add_subcommand("obstruct", "Nonexistence report");
  obstruct->add_option("poly", o.input)->required();
  obstruct->add_flag("--assert-no-line", o.assert_no_line);
  obstruct->add_flag("--assert-cone", o.assert_cone);
  obstruct->add_option("--samples", o.samples);

  auto* counter = app.add_subcommand("counterexample", "Compact counterexample q_r");
  counter->add_option("poly", o.input)->required();
  counter->add_option("--r", o.r, "Rational r > 1")->required();
  counter->add_option("--samples", o.samples);
  counter->add_option("-o,--output", o.output);

  auto* examples = app.add_subcommand("examples", "Print a named example");
  examples->add_option("name", o.input);
  examples->add_flag("--list", o.list);

  for (auto* sub : {det, member, reduce, dbl, construct, equiv, obstruct, counter}) {
    o.seed.attach(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(check)) return run_check_rz(o, out);
    if (app.got_subcommand(det)) return run_det(o, out);
    if (app.got_subcommand(member)) return run_member(o, out);
    if (app.got_subcommand(reduce)) return run_reduce(o, out);
    if (app.got_subcommand(dbl)) return run_double(o, out);
    if (app.got_subcommand(construct)) return run_construct(o, out);
    if (app.got_subcommand(equiv)) return run_equiv(o, out);
    if (app.got_subcommand(bounds)) return run_bounds(o, out);
    if (app.got_subcommand(obstruct)) return run_obstruct(o, out);
    if (app.got_subcommand(counter)) return run_counterexample(o, out);
    if (app.got_subcommand(examples)) return run_examples(o, out);
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const NotWitnessedError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const LimitError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rzpencil
