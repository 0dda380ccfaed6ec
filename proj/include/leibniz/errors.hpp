// Copyright 2026 The Leibniz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEIBNIZ_ERRORS_HPP
#define LEIBNIZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A word mixes two distinct symbols with no declared commutation, so it
/// cannot be rewritten into sorted form.
class NonCommutingWord : public Error {
 public:
  NonCommutingWord(const std::string& word, const std::string& s,
                   const std::string& t)
      : Error("word '" + word + "' mixes non-commuting symbols '" + s +
              "' and '" + t + "'"),
        first(s),
        second(t) {}

  std::string first;
  std::string second;
};

/// A closed form was requested without the commutation hypotheses it needs.
class MissingHypothesis : public Error {
 public:
  MissingHypothesis(const std::string& s, const std::string& t)
      : Error("commutation of '" + s + "' and '" + t +
              "' is required but not declared"),
        first(s),
        second(t) {}

  std::string first;
  std::string second;
};

/// A word references a symbol with no concrete map assigned.
class UnboundSymbol : public Error {
 public:
  explicit UnboundSymbol(const std::string& name)
      : Error("symbol '" + name + "' has no assigned map"), symbol(name) {}

  std::string symbol;
};

/// Malformed text input (spec files, model files, element literals).
/// `line` is 1-based; 0 means the input was not line-oriented.
class ParseError : public Error {
 public:
  ParseError(std::size_t line_no, const std::string& msg)
      : Error(line_no == 0 ? msg : "line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}

  std::size_t line;
};

/// A spec file does not declare exactly two summands.
class ArityError : public ParseError {
 public:
  ArityError(std::size_t line_no, const std::string& msg)
      : ParseError(line_no, msg) {}
};

}  // namespace leibniz

#endif  // LEIBNIZ_ERRORS_HPP
