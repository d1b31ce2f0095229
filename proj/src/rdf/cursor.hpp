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

#ifndef SCHEMAGATE_SRC_RDF_CURSOR_HPP_
#define SCHEMAGATE_SRC_RDF_CURSOR_HPP_

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "schemagate/rdf/parser.hpp"

namespace schemagate::rdf::internal {

// Byte cursor with line/column bookkeeping shared by the Turtle and
// N-Triples readers.
class Cursor {
 public:
  explicit Cursor(std::string_view input) : in_(input) {}

  bool AtEnd() const { return pos_ >= in_.size(); }
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < in_.size() ? in_[pos_ + ahead] : '\0';
  }
  bool LookingAt(std::string_view s) const {
    return in_.substr(pos_).starts_with(s);
  }
  char Next() {
    char c = in_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  void Skip(std::size_t n) {
    for (std::size_t i = 0; i < n && !AtEnd(); ++i) Next();
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  std::size_t pos() const { return pos_; }

  // The upcoming token, for diagnostics.
  std::string Token() const {
    std::size_t end = pos_;
    while (end < in_.size() && end - pos_ < 24 &&
           !std::isspace(static_cast<unsigned char>(in_[end]))) {
      ++end;
    }
    if (end == pos_) return AtEnd() ? "<end of input>" : std::string(1, in_[pos_]);
    return std::string(in_.substr(pos_, end - pos_));
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, line_, column_, Token());
  }

  void Expect(char c) {
    if (Peek() != c || AtEnd()) Fail(std::string("expected '") + c + "'");
    Next();
  }

  // Reads "<...>" and returns the unescaped contents.
  std::string ReadIriRef();
  // Reads a quoted string (short or long form, ' or "), unescaped.
  std::string ReadString(bool allow_long_and_single);
  // Reads "@tag" and returns the tag.
  std::string ReadLangTag();
  // Reads a blank node label after "_:".
  std::string ReadBlankLabel();

 private:
  std::uint32_t ReadHex(int digits);

  std::string_view in_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

void AppendUtf8(std::string& out, std::uint32_t cp);

bool IsNameByte(char c);

// Maps document blank-node labels to b0, b1, ... per parse session.
class BlankLabeler {
 public:
  std::string Named(const std::string& label) {
    auto [it, inserted] = named_.try_emplace(label);
    if (inserted) it->second = Fresh();
    return it->second;
  }
  std::string Fresh() { return "b" + std::to_string(counter_++); }

 private:
  std::map<std::string, std::string> named_;
  std::size_t counter_ = 0;
};

}  // namespace schemagate::rdf::internal

#endif  // SCHEMAGATE_SRC_RDF_CURSOR_HPP_
