// Copyright 2026 The uninorm Authors
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

#ifndef UNINORM_ERROR_HPP
#define UNINORM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace uninorm {

/// Failure categories raised by the library. Each maps onto one status code
/// of the C interface.
enum class Errc {
  argument,           ///< caller passed an impossible value (bad scale, index out of range)
  structural,         ///< malformed table: wrong dimensions, entry out of range, asymmetric
  parse,              ///< text document or family spec could not be parsed
  domain,             ///< operation undefined for this input (scale mismatch, non-proper uninorm)
  wrong_case,         ///< theorem predicate called for the wrong neutral-element ordering
  empty_restriction,  ///< underlying t-norm/t-conorm requested where the square is a point
  invalid_uninorm,    ///< table fails the uninorm axioms
  composition,        ///< composed candidate tables are rejected
  refused,            ///< decomposition of a non-distributive pair
  resource,           ///< configured scale or pair budget exceeded
  internal,           ///< an invariant the library guarantees was observed broken
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failures carry a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(Errc::parse, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace uninorm

#endif  // UNINORM_ERROR_HPP
