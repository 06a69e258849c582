// Copyright 2026 The coevo Authors.
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coevo {

/// Base of every error thrown by the library. Callers that only need to
/// report a failure can catch this; the subclasses exist so tests and the
/// CLI can tell the failure modes apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph construction.
class CycleDetected : public Error {
 public:
  using Error::Error;
};

class Unreachable : public Error {
 public:
  Unreachable(std::uint32_t vertex, const std::string& what)
      : Error(what), vertex_(vertex) {}
  std::uint32_t vertex() const noexcept { return vertex_; }

 private:
  std::uint32_t vertex_;
};

class BadEdge : public Error {
 public:
  using Error::Error;
};

class BadStrategy : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// Game generators.
class BadParams : public Error {
 public:
  using Error::Error;
};

class UnknownFixture : public Error {
 public:
  using Error::Error;
};

// Strategy string codec.
class BadChar : public Error {
 public:
  using Error::Error;
};

class BadLength : public Error {
 public:
  using Error::Error;
};

class IllegalMove : public Error {
 public:
  using Error::Error;
};

// EDA.
class GammaTooLarge : public Error {
 public:
  using Error::Error;
};

class MissingSwitchability : public Error {
 public:
  using Error::Error;
};

// Switchability and enumeration oracles.
class ForeignEdge : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace coevo
