// Copyright 2026 The kdsm Authors.
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

#ifndef KDSM_ERRORS_H_
#define KDSM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace kdsm {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class MalformedRational : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// An exhaustive routine was asked to enumerate more than its guard allows.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

// p/q parameters fall below the tractability threshold.
class IntractableRegime : public Error {
 public:
  using Error::Error;
};

// A square system of linear equations has no unique solution.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

// A randomized generator ran out of attempts.
class GeneratorExhausted : public Error {
 public:
  using Error::Error;
};

// Two independent routes disagree, or a certificate fails its exact check.
// Usually means the input violates its declared distance parameter.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace kdsm

#endif  // KDSM_ERRORS_H_
