// Copyright 2026 The djpart Authors
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

#ifndef DJPART_ERRORS_HPP
#define DJPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace djpart {

/// Base of every error raised by the library. The CLI maps each subclass
/// onto exactly one process exit code.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (non-bit
/// input, empty sequence, inverted address range, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Machine configuration out of range (e.g. query register width).
class ConfigError : public Error {
   public:
    using Error::Error;
};

/// A memory window, register, or integer cell is too small for the request.
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// A cell holds the wrong kind of value (Empty or Symbol where a Number is
/// required, non-bit in a partition vector).
class TypeError : public Error {
   public:
    using Error::Error;
};

/// An oracle broke its contract (returned something other than 0 or 1).
class ContractError : public Error {
   public:
    using Error::Error;
};

}  // namespace djpart

#endif  // DJPART_ERRORS_HPP
