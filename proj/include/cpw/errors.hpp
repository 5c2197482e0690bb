// Copyright 2026 The cpw Authors
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

#ifndef CPW_ERRORS_HPP
#define CPW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cpw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is not connected") {}
};

/// The occurrence range of a subgraph in a decomposition is empty or has a gap.
class InvalidInterval : public Error {
 public:
  using Error::Error;
};

/// The requested set has no in-branch in the given decomposition.
class NoInBranch : public Error {
 public:
  NoInBranch() : Error("set has no in-branch in this decomposition") {}
};

class WidthBudget : public Error {
 public:
  using Error::Error;
};

/// A replayed witness or a transformation produced something that is not a
/// valid decomposition. Always a bug in this library.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  Infeasible() : Error("no decomposition exists within the bag budget") {}
};

/// A solve request with no seeds, a zero budget or an empty graph.
class InvalidRequest : public Error {
 public:
  using Error::Error;
};

class BadSpec : public Error {
 public:
  using Error::Error;
};

class StateLimitExceeded : public Error {
 public:
  explicit StateLimitExceeded(std::size_t limit)
      : Error("state limit of " + std::to_string(limit) + " exceeded") {}
};

}  // namespace cpw

#endif  // CPW_ERRORS_HPP
