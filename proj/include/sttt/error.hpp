// Copyright 2026 The sttt Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace sttt {

// Base class for every error the library raises. Domain errors (bad sizes,
// parse failures, rule violations) derive from it; the CLI maps them to
// exit code 1, except VerificationFailure which maps to 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSize : public Error {
 public:
  explicit InvalidSize(int n)
      : Error("invalid board size " + std::to_string(n) + " (must be >= 1)") {}
};

class InvalidLayer : public Error {
 public:
  InvalidLayer(int k, int layers)
      : Error("invalid layer " + std::to_string(k) + " (valid range 1.." +
              std::to_string(layers) + ")") {}
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

class ClosureViolation : public Error {
 public:
  ClosureViolation(std::string member, std::string image)
      : Error("board set is not closed under the group action: " + member +
              " maps to " + image + " which is not in the set"),
        member_(std::move(member)),
        image_(std::move(image)) {}

  const std::string& member() const { return member_; }
  const std::string& image() const { return image_; }

 private:
  std::string member_;
  std::string image_;
};

// An invariant check failed. This always indicates an implementation bug.
class VerificationFailure : public Error {
 public:
  VerificationFailure(std::string relation, const std::string& detail)
      : Error("relation '" + relation + "' failed: " + detail),
        relation_(std::move(relation)) {}

  const std::string& relation() const { return relation_; }

 private:
  std::string relation_;
};

}  // namespace sttt
