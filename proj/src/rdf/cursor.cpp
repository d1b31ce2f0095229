// Copyright 2026 The Schemagate Authors.
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

#include "cursor.hpp"

namespace schemagate::rdf::internal {

void AppendUtf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool IsNameByte(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || u >= 0x80;
}

std::uint32_t Cursor::ReadHex(int digits) {
  std::uint32_t value = 0;
  for (int i = 0; i < digits; ++i) {
    char c = Peek();
    if (!std::isxdigit(static_cast<unsigned char>(c)) || AtEnd()) {
      Fail("invalid hex digit in escape sequence");
    }
    Next();
    value = value * 16 +
            static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(c))
                                           ? c - '0'
                                           : std::tolower(c) - 'a' + 10);
  }
  if (value > 0x10FFFF) Fail("code point out of range");
  return value;
}

std::string Cursor::ReadIriRef() {
  Expect('<');
  std::string out;
  while (true) {
    if (AtEnd()) Fail("unterminated IRI");
    char c = Peek();
    if (c == '>') {
      Next();
      return out;
    }
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
        c == '|' || c == '^' || c == '`') {
      Fail("invalid character in IRI");
    }
    if (c == '\\') {
      Next();
      char e = AtEnd() ? '\0' : Next();
      if (e == 'u') {
        AppendUtf8(out, ReadHex(4));
      } else if (e == 'U') {
        AppendUtf8(out, ReadHex(8));
      } else {
        Fail("invalid escape in IRI");
      }
      continue;
    }
    out += Next();
  }
}

std::string Cursor::ReadString(bool allow_long_and_single) {
  char quote = Peek();
  if (quote != '"' && !(allow_long_and_single && quote == '\'')) {
    Fail("expected string literal");
  }
  if (quote == '\'' && !allow_long_and_single) Fail("expected '\"'");
  bool is_long = allow_long_and_single &&
                 LookingAt(std::string(3, quote));
  Skip(is_long ? 3 : 1);
  std::string out;
  while (true) {
    if (AtEnd()) Fail("unterminated string literal");
    char c = Peek();
    if (is_long) {
      if (LookingAt(std::string(3, quote))) {
        // """a"""" ends with a quote inside the literal.
        std::size_t run = 3;
        while (Peek(run) == quote) ++run;
        for (std::size_t i = 3; i < run; ++i) out += quote;
        Skip(run);
        return out;
      }
    } else {
      if (c == quote) {
        Next();
        return out;
      }
      if (c == '\n' || c == '\r') Fail("newline in short string literal");
    }
    if (c == '\\') {
      Next();
      if (AtEnd()) Fail("unterminated escape");
      char e = Next();
      switch (e) {
        case 't': out += '\t'; break;
        case 'b': out += '\b'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        case '\\': out += '\\'; break;
        case 'u': AppendUtf8(out, ReadHex(4)); break;
        case 'U': AppendUtf8(out, ReadHex(8)); break;
        default: Fail(std::string("invalid string escape '\\") + e + "'");
      }
      continue;
    }
    out += Next();
  }
}

std::string Cursor::ReadLangTag() {
  Expect('@');
  std::string tag;
  while (std::isalpha(static_cast<unsigned char>(Peek())) && !AtEnd()) {
    tag += Next();
  }
  if (tag.empty()) Fail("empty language tag");
  while (Peek() == '-' &&
         std::isalnum(static_cast<unsigned char>(Peek(1)))) {
    tag += Next();
    while (std::isalnum(static_cast<unsigned char>(Peek())) && !AtEnd()) {
      tag += Next();
    }
  }
  return tag;
}

std::string Cursor::ReadBlankLabel() {
  if (!LookingAt("_:")) Fail("expected blank node label");
  Skip(2);
  std::string label;
  while (!AtEnd() && (IsNameByte(Peek()) || Peek() == '.')) {
    if (Peek() == '.' && !IsNameByte(Peek(1)) && Peek(1) != '.') break;
    label += Next();
  }
  if (label.empty()) Fail("empty blank node label");
  return label;
}

}  // namespace schemagate::rdf::internal
