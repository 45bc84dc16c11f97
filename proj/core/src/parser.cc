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

#include <cctype>
#include <optional>

#include "rzpencil/polynomial.h"

namespace rzpencil {
namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Maps a variable name to its index, or nullopt if it is not a variable name.
std::optional<int> variable_index(std::string_view name, int nvars,
                                  const ParseOptions& options) {
  if (name.size() >= 2 && name[0] == 'x') {
    int value = 0;
    for (std::size_t k = 1; k < name.size(); ++k) {
      if (!is_digit(name[k])) return std::nullopt;
      if (value > 100000) return std::nullopt;
      value = value * 10 + (name[k] - '0');
    }
    return value - options.base;
  }
  if (options.aliases && name.size() == 1 && nvars <= 3) {
    static constexpr std::string_view kFirst = "xyz";
    static constexpr std::string_view kSecond = "abc";
    auto pos = kFirst.find(name[0]);
    if (pos == std::string_view::npos) pos = kSecond.find(name[0]);
    if (pos != std::string_view::npos) return static_cast<int>(pos);
  }
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::string_view text, int nvars, const ParseOptions& options,
         bool allow_imaginary)
      : text_(text),
        nvars_(nvars),
        options_(options),
        allow_imaginary_(allow_imaginary) {}

  ComplexPoly parse() {
    ComplexPoly result = expression();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return result;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  ComplexPoly expression() {
    ComplexPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  ComplexPoly term() {
    ComplexPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const ComplexPoly divisor = unary();
        if (divisor.is_zero()) throw ParseError("division by zero", at);
        if (divisor.degree() != 0) throw ParseError("division by a non-constant", at);
        acc = acc.scaled(CQuad(1) / divisor.constant_term());
      } else {
        return acc;
      }
    }
  }

  ComplexPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ComplexPoly power() {
    ComplexPoly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      const mpz_class e = integer_literal();
      if (e > 1000) throw ParseError("exponent too large", at);
      return base.pow(static_cast<int>(e.get_si()));
    }
    return base;
  }

  mpz_class integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  mpq_class number() {
    const std::size_t start = pos_;
    std::string digits;
    int scale = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) digits += text_[pos_++];
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) {
        digits += text_[pos_++];
        --scale;
      }
    }
    if (digits.empty()) throw ParseError("malformed number", start);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      bool negative = false;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) {
        negative = text_[look] == '-';
        ++look;
      }
      if (look < text_.size() && is_digit(text_[look])) {
        int e = 0;
        while (look < text_.size() && is_digit(text_[look])) {
          if (e > 10000) throw ParseError("exponent too large", pos_);
          e = e * 10 + (text_[look++] - '0');
        }
        scale += negative ? -e : e;
        pos_ = look;
      }
    }
    mpq_class value{mpz_class(digits, 10)};
    mpz_class ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(scale)));
    if (scale > 0) value *= ten_power;
    if (scale < 0) value /= ten_power;
    value.canonicalize();
    return value;
  }

  ComplexPoly constant(const CQuad& c) const { return ComplexPoly::constant(nvars_, c); }

  ComplexPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ComplexPoly inner = expression();
      expect(')');
      return inner;
    }
    if (is_digit(c) || c == '.') return constant(CQuad(Quad(number())));
    if (!is_ident_start(c)) {
      throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "sqrt") {
      expect('(');
      skip_space();
      const std::size_t at = pos_;
      const mpz_class m = integer_literal();
      expect(')');
      if (m <= 0 || !m.fits_slong_p()) throw ParseError("sqrt needs a positive integer", at);
      return constant(CQuad(Quad::sqrt_of(m.get_si())));
    }
    if (name == "i" && allow_imaginary_) return constant(CQuad::i());
    const auto index = variable_index(name, nvars_, options_);
    if (!index || *index < 0 || *index >= nvars_) {
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    return ComplexPoly::variable(nvars_, *index);
  }

  std::string_view text_;
  int nvars_;
  ParseOptions options_;
  bool allow_imaginary_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, int nvars, const ParseOptions& options) {
  const ComplexPoly p = Parser(text, nvars, options, false).parse();
  return real_part_checked(p);
}

int infer_nvars(std::string_view text, const ParseOptions& options) {
  int count = 0;
  bool saw_alias = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!is_ident_start(text[pos]) || (pos > 0 && is_ident_char(text[pos - 1]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    const std::string_view name = text.substr(start, pos - start);
    if (name.size() == 1) {
      const auto index = variable_index(name, 3, options);
      if (index) {
        saw_alias = true;
        count = std::max(count, *index + 1);
      }
      continue;
    }
    const auto index = variable_index(name, 0, options);
    if (index && *index >= 0) count = std::max(count, *index + 1);
  }
  if (saw_alias && count > 3) {
    throw ParseError("single-letter aliases need at most three variables", 0);
  }
  return count;
}

CQuad parse_complex_constant(std::string_view text) {
  const ComplexPoly p = Parser(text, 0, ParseOptions{0, false}, true).parse();
  return p.constant_term();
}

Quad parse_real_constant(std::string_view text) {
  const CQuad c = parse_complex_constant(text);
  if (!c.is_real()) throw ParseError("expected a real constant", 0);
  return c.real();
}

}  // namespace rzpencil
