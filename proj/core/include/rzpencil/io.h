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

#pragma once

// Text formats for polynomials, pencils and key: value transcripts.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rzpencil/clifford.h"
#include "rzpencil/obstruction.h"
#include "rzpencil/pencil.h"
#include "rzpencil/polynomial.h"
#include "rzpencil/realzero.h"
#include "rzpencil/reduction.h"

namespace rzpencil {

// poly nvars=<n> domain=<rational|sqrt:m|float> [base=1]
// <expression>
struct PolyFile {
  Poly poly;
  int base = 0;
};
PolyFile read_poly(std::string_view text);
std::string write_poly(const Poly& p, int base = 0);

// pencil nvars=<n> size=<k> domain=<...> symmetry=<hermitian|symmetric>
// followed by n blocks of k lines with k entries each. Entries are `re` or
// `re+im*i`; '#' starts a comment.
Pencil read_pencil(std::string_view text);
std::string write_pencil(const Pencil& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// %.17g, which reads back to the same double.
std::string format_double(double x);

class Transcript {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, long value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, int value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, double value) { add(std::move(key), format_double(value)); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add_seed(std::uint64_t seed) { add("seed", std::to_string(seed)); }

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Parses `key: value` lines (optionally behind "# "), skipping lines
// without ": ".
std::vector<std::pair<std::string, std::string>> parse_transcript(std::string_view text);
// The value of the first entry with this key, or empty.
std::string transcript_value(const std::vector<std::pair<std::string, std::string>>& entries,
                             std::string_view key);

std::string format_point(const std::vector<Quad>& a);

void describe(Transcript& t, const RzVerdict& v);
void describe(Transcript& t, const IdentityVerdict& v);
void describe(Transcript& t, const EquivalenceVerdict& v);
void describe(Transcript& t, const ReductionResult& r);
void describe(Transcript& t, const ObstructionReport& r);
void describe(Transcript& t, const CompactCheck& c);

}  // namespace rzpencil
