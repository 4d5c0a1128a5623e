// Copyright 2026 The Authors.
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

namespace netsel {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user-supplied argument (unknown node id, malformed parameter, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// Cholesky factorization failed: the matrix is not positive definite.
class NotPositiveDefiniteError : public Error {
 public:
  using Error::Error;
};

/// Grounded Laplacian is singular: some follower component has no input.
class SingularLaplacianError : public Error {
 public:
  using Error::Error;
};

/// Lyapunov solve requires a Hurwitz system matrix; callers should fall back
/// to the finite-horizon Gramian.
class NotHurwitzError : public Error {
 public:
  using Error::Error;
};

/// Controllability Gramian is singular (uncontrollable pair).
class GramianSingularError : public Error {
 public:
  using Error::Error;
};

/// Cover target cannot be met even with the full ground set.
class InfeasibleTargetError : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration guard tripped.
class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

/// Integration step too large for a stable explicit scheme.
class UnstableStepError : public Error {
 public:
  using Error::Error;
};

/// Random walk exceeded its step cap (target set unreachable).
class WalkCapExceededError : public Error {
 public:
  using Error::Error;
};

/// A constructed independence system violated the matroid axioms.
class MatroidAxiomError : public Error {
 public:
  using Error::Error;
};

}  // namespace netsel
