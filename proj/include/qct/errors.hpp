// Copyright 2026 The qct Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qct {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A register would exceed the configured qubit limit.
class CapacityExceeded : public Error {
   public:
    CapacityExceeded(std::size_t requested, std::size_t limit)
        : Error("capacity exceeded: " + std::to_string(requested) + " qubits requested, limit is " +
                std::to_string(limit)),
          requested(requested),
          limit(limit) {
    }
    std::size_t requested;
    std::size_t limit;
};

/// A gate or circuit was applied to a register of the wrong width.
class ArityMismatch : public Error {
   public:
    ArityMismatch(std::size_t expected, std::size_t actual)
        : Error("arity mismatch: expected " + std::to_string(expected) + " qubits, got " +
                std::to_string(actual)),
          expected(expected),
          actual(actual) {
    }
    std::size_t expected;
    std::size_t actual;
};

/// Amplitude data that does not describe a unit vector of a 2^n space.
class InvalidState : public Error {
   public:
    using Error::Error;
};

class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t offset, const std::string &what)
        : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset(offset) {
    }
    std::size_t offset;
};

/// An atom was named after a reserved word of the language (`f`, `not`, ...).
class ReservedName : public Error {
   public:
    explicit ReservedName(const std::string &name) : Error("reserved name used as atom: '" + name + "'"), name(name) {
    }
    std::string name;
};

class UnboundAtom : public Error {
   public:
    explicit UnboundAtom(const std::string &atom) : Error("unbound atom: '" + atom + "'"), atom(atom) {
    }
    std::string atom;
};

/// Malformed model input (bad JSON shape, non-unit qubit, entry for `f`).
class ModelError : public Error {
   public:
    using Error::Error;
};

class SamplerStuck : public Error {
   public:
    using Error::Error;
};

}  // namespace qct
