// hstlink — link-level analysis for delay-correlated antenna arrays
// Copyright (C) 2026 The hstlink authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace hstlink {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// A series or iterative scheme failed to converge within its budget.
class DivergenceError : public Error {
  public:
    using Error::Error;
};

/// An integrand or statistic evaluated to NaN/Inf.
class NonFiniteError : public Error {
  public:
    using Error::Error;
};

/// A matrix could not be repaired to positive semidefiniteness.
class NotPsdError : public Error {
  public:
    using Error::Error;
};

/// An index is outside its documented range.
class IndexError : public Error {
  public:
    using Error::Error;
};

/// A transmit symbol deviates from unit modulus.
class ModulusError : public Error {
  public:
    using Error::Error;
};

/// A linear system is numerically singular.
class SingularityError : public Error {
  public:
    using Error::Error;
};

/// A detection channel coefficient is (numerically) zero.
class ZeroChannelError : public Error {
  public:
    using Error::Error;
};

/// An aggregate was requested over an empty collection.
class EmptyError : public Error {
  public:
    using Error::Error;
};

/// A sweep grid is empty or malformed.
class GridError : public Error {
  public:
    using Error::Error;
};

/// A closed form is evaluated outside its domain of validity.
class DegenerateError : public Error {
  public:
    using Error::Error;
};

/// Invalid or unknown configuration input.
class ConfigError : public Error {
  public:
    using Error::Error;
};

}  // namespace hstlink
