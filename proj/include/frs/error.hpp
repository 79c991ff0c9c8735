// Copyright 2026 The folded-rs Authors.
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

#ifndef FRS_ERROR_HPP
#define FRS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace frs {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arithmetic input: zero divisor, zero polynomial where a nonzero one
/// is required, mismatched dimensions.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A code or decoder parameterization that cannot be used.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input or failed file access.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (candidate cap, oracle size) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace frs

#endif  // FRS_ERROR_HPP
