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

#include "rzpencil/io.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace rzpencil {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  const auto hash = s.find('#');
  return trim(hash == std::string_view::npos ? s : s.substr(0, hash));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Content lines with comments removed.
std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line = strip_comment(
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (!line.empty()) out.emplace_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::map<std::string, std::string> parse_header(const std::string& line, std::string_view kind) {
  const auto tokens = split_ws(line);
  if (tokens.empty() || tokens[0] != kind) {
    throw FormatError("expected a '" + std::string(kind) + "' header");
  }
  std::map<std::string, std::string> fields;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string::npos) throw FormatError("malformed header field '" + tokens[i] + "'");
    fields[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
  }
  return fields;
}

const std::string& required(const std::map<std::string, std::string>& fields,
                            const std::string& key) {
  const auto it = fields.find(key);
  if (it == fields.end()) throw FormatError("header is missing '" + key + "='");
  return it->second;
}

int parse_count(const std::string& text, const std::string& key) {
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0' || v < 0 || v > 100000) {
    throw FormatError("invalid " + key + " '" + text + "'");
  }
  return static_cast<int>(v);
}

// Accepts `re`, `re+im*i`, `re-im*i` with plain decimal numbers; anything
// else goes through the exact constant grammar.
std::complex<double> parse_float_entry(const std::string& s) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double re = std::strtod(begin, &end);
  if (end != begin) {
    if (*end == '\0') return {re, 0.0};
    if (*end == '+' || *end == '-') {
      const char* im_begin = end;
      char* im_end = nullptr;
      const double im = std::strtod(im_begin, &im_end);
      if (im_end != im_begin && std::string_view(im_end) == "*i") return {re, im};
    }
  }
  try {
    return parse_complex_constant(s).to_complex();
  } catch (const ParseError& e) {
    throw FormatError("invalid matrix entry '" + s + "': " + e.what());
  }
}

std::string format_entry(const std::complex<double>& z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string im = format_double(z.imag());
  if (im.front() != '-') im = "+" + im;
  return format_double(z.real()) + im + "*i";
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

PolyFile read_poly(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() != 2) throw FormatError("polynomial file needs a header and one expression line");
  const auto fields = parse_header(lines[0], "poly");
  const int nvars = parse_count(required(fields, "nvars"), "nvars");
  const CoefficientDomain domain = CoefficientDomain::parse(required(fields, "domain"));
  PolyFile out;
  if (const auto it = fields.find("base"); it != fields.end()) {
    if (it->second != "0" && it->second != "1") throw FormatError("base must be 0 or 1");
    out.base = it->second == "1" ? 1 : 0;
  }
  ParseOptions options;
  options.base = out.base;
  try {
    out.poly = parse_poly(lines[1], nvars, options);
  } catch (const ParseError& e) {
    throw FormatError(std::string("expression: ") + e.what());
  }
  const CoefficientDomain found = out.poly.domain();
  if (!domain.is_float() && !(found == CoefficientDomain::rational()) && !(found == domain)) {
    throw FormatError("coefficients in " + found.to_string() + " do not fit declared domain " +
                      domain.to_string());
  }
  out.poly.set_domain(domain);
  return out;
}

std::string write_poly(const Poly& p, int base) {
  std::string header = "poly nvars=" + std::to_string(p.nvars()) +
                       " domain=" + p.domain().to_string();
  if (base == 1) header += " base=1";
  return header + "\n" + to_string(p, base) + "\n";
}

Pencil read_pencil(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw FormatError("empty pencil file");
  const auto fields = parse_header(lines[0], "pencil");
  const int n = parse_count(required(fields, "nvars"), "nvars");
  const int k = parse_count(required(fields, "size"), "size");
  const CoefficientDomain domain = CoefficientDomain::parse(required(fields, "domain"));
  const Symmetry symmetry = parse_symmetry(required(fields, "symmetry"));
  if (lines.size() != static_cast<std::size_t>(n) * k + 1) {
    throw FormatError("expected " + std::to_string(n * k) + " matrix rows, found " +
                      std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    rows.push_back(split_ws(lines[r]));
    if (static_cast<int>(rows.back().size()) != k) {
      throw FormatError("matrix row " + std::to_string(r) + " has " +
                        std::to_string(rows.back().size()) + " entries, expected " +
                        std::to_string(k));
    }
  }
  try {
    if (domain.is_float()) {
      std::vector<Eigen::MatrixXcd> ms;
      for (int l = 0; l < n; ++l) {
        Eigen::MatrixXcd m(k, k);
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) m(i, j) = parse_float_entry(rows[l * k + i][j]);
        }
        ms.push_back(std::move(m));
      }
      return Pencil::from_numeric(n, k, std::move(ms), symmetry);
    }
    std::vector<CQMatrix> ms;
    for (int l = 0; l < n; ++l) {
      CQMatrix m(k, k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          const CQuad z = parse_complex_constant(rows[l * k + i][j]);
          const long radicand = z.radicand();
          if (radicand != 0 && !(domain == CoefficientDomain::sqrt(radicand))) {
            throw FormatError("entry '" + rows[l * k + i][j] + "' is outside domain " +
                              domain.to_string());
          }
          m(i, j) = z;
        }
      }
      ms.push_back(std::move(m));
    }
    return Pencil::from_exact(n, k, std::move(ms), symmetry);
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("invalid pencil: ") + e.what());
  }
}

std::string write_pencil(const Pencil& p) {
  std::ostringstream out;
  out << "pencil nvars=" << p.nvars() << " size=" << p.size()
      << " domain=" << p.domain().to_string() << " symmetry=" << to_string(p.symmetry()) << "\n";
  for (int l = 0; l < p.nvars(); ++l) {
    out << "# M" << l + 1 << "\n";
    for (int i = 0; i < p.size(); ++i) {
      for (int j = 0; j < p.size(); ++j) {
        if (j > 0) out << ' ';
        if (p.is_exact()) {
          out << p.exact_matrices()[l](i, j).to_string();
        } else {
          out << format_entry(p.matrices()[l](i, j));
        }
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << contents;
}

void Transcript::add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
}

std::string Transcript::str() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_transcript(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) line.erase(0, 2);
    const auto colon = line.find(": ");
    if (colon == std::string::npos) continue;
    out.emplace_back(line.substr(0, colon), line.substr(colon + 2));
  }
  return out;
}

std::string transcript_value(const std::vector<std::pair<std::string, std::string>>& entries,
                             std::string_view key) {
  for (const auto& [k, v] : entries) {
    if (k == key) return v;
  }
  return {};
}

std::string format_point(const std::vector<Quad>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ",";
    out += a[i].to_string();
  }
  return out;
}

void describe(Transcript& t, const RzVerdict& v) {
  t.add("is_rz", v.is_rz);
  t.add("mode", v.mode == RzVerdict::Mode::kExact ? "proved" : "sampled");
  t.add("method", v.method);
  t.add("directions", v.directions_checked);
  t.add_seed(v.seed);
  if (v.witness) t.add("witness", format_point(*v.witness));
}

void describe(Transcript& t, const IdentityVerdict& v) {
  t.add("identity", v.pass ? "pass" : "fail");
  t.add("mode", to_string(v.mode));
  t.add("points", v.points);
  t.add("mismatches", v.mismatches);
  t.add_seed(v.seed);
  t.add("max_rel_error", v.max_rel_error);
  t.add("tau_id", kTauId);
  if (!v.reason.empty()) t.add("reason", v.reason);
  if (v.mismatch_point) t.add("mismatch_point", format_point(*v.mismatch_point));
}

void describe(Transcript& t, const EquivalenceVerdict& v) {
  t.add("verdict", to_string(v.verdict));
  t.add("reason", v.reason);
  t.add("words_checked", v.words_checked);
  if (!v.witness_word.empty()) {
    std::string w;
    for (std::size_t i = 0; i < v.witness_word.size(); ++i) {
      if (i > 0) w += ",";
      w += std::to_string(v.witness_word[i] + 1);
    }
    t.add("witness_word", w);
    t.add("trace_first", format_entry(v.trace_first));
    t.add("trace_second", format_entry(v.trace_second));
  }
  if (v.unitary) {
    t.add("residual", v.residual);
    t.add("tau_eq", kTauEq);
  }
}

void describe(Transcript& t, const ReductionResult& r) {
  t.add("original_size", static_cast<int>(r.q.rows()));
  t.add("reduced_size", r.reduced.size());
  t.add("removed", r.removed);
  t.add("max_off_block", r.max_off_block);
  t.add("max_det_error", r.max_det_error);
  t.add("tau_block", kTauBlock);
  if (r.witness) {
    std::string w;
    for (std::size_t i = 0; i < r.witness->size(); ++i) {
      if (i > 0) w += ",";
      w += format_double((*r.witness)[i]);
    }
    t.add("witness", w);
    t.add("witness_source", r.witness_source);
  }
}

void describe(Transcript& t, const ObstructionReport& r) {
  t.add("nvars", r.n);
  t.add("degree", r.d);
  t.add_seed(r.seed);
  for (const auto& h : r.hypotheses) {
    t.add("hypothesis." + h.name, to_string(h.status));
    if (!h.detail.empty()) t.add("hypothesis." + h.name + ".detail", h.detail);
  }
  if (r.cone_direction) t.add("cone_direction", format_point(*r.cone_direction));
  for (std::size_t i = 0; i < r.conclusions.size(); ++i) {
    const auto& c = r.conclusions[i];
    std::string value = to_string(c.kind) + " " + to_string(c.claim);
    if (c.claim == Claim::kSizeLowerBound) value += " " + std::to_string(c.bound);
    value += " theorem=" + c.theorem;
    std::string hyps;
    for (const auto& h : c.hypotheses) hyps += (hyps.empty() ? "" : ",") + h;
    if (!hyps.empty()) value += " hypotheses=" + hyps;
    const std::string key = "conclusion." + std::to_string(i + 1);
    t.add(key, value);
    if (!c.note.empty()) t.add(key + ".note", c.note);
  }
}

void describe(Transcript& t, const CompactCheck& c) {
  describe(t, c.rz);
  t.add("bounded", c.bounded);
  t.add("max_distance", c.max_distance);
  t.add("radius", c.radius);
  t.add("boundary_directions", c.directions);
  t.add("note", c.note);
}

}  // namespace rzpencil
