// Copyright 2026 The biprym Authors
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

#include <stdexcept>
#include <string>

namespace biprym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (e.g. resultant of two zeros).
class UndefinedInput : public Error {
 public:
  using Error::Error;
};

/// Input of the wrong shape or degree for the requested operation.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// disc(tau) * disc(tau_check) == 0.
class SingularCurve : public Error {
 public:
  enum class Factor { kTau, kTauCheck, kBoth };

  SingularCurve(Factor factor, const std::string& what)
      : Error(what), factor_(factor) {}

  Factor factor() const noexcept { return factor_; }

 private:
  Factor factor_;
};

/// A quartic model (z^2 + S)^2 = T with T == S^2 (or T == 0 after dualizing).
class DegenerateModel : public Error {
 public:
  using Error::Error;
};

/// A binary quartic with a repeated root in P^1.
class DegenerateBranch : public Error {
 public:
  using Error::Error;
};

/// A point that does not lie on its curve.
class InvalidPoint : public Error {
 public:
  using Error::Error;
};

/// A point at which an evaluation path has a pole or 0/0.
class IndeterminatePoint : public Error {
 public:
  using Error::Error;
};

/// The map a -> (jF(a), jK(a)) is not birational onto its image.
class DegenerateMap : public Error {
 public:
  using Error::Error;
};

/// A lattice or fixture identity that must hold failed to hold.
class ConstructionInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace biprym
