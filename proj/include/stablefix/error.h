// Copyright 2026 The stablefix Authors
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

#ifndef STABLEFIX_ERROR_H_
#define STABLEFIX_ERROR_H_

#include <stdexcept>
#include <string>

namespace stablefix {

// Invalid input data or a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance or CNF text. Line and column are 1-based; column 0 means
// the error concerns the whole line.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

// The problem is well-formed but has no solution (for example a bribery
// problem whose matching is not maximal).
class Infeasible : public Error {
 public:
  using Error::Error;
};

// An enumeration oracle was asked to exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace stablefix

#endif  // STABLEFIX_ERROR_H_
