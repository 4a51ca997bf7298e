/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef POSMAP_ERRORS_HPP
#define POSMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace posmap {

// Base class for all posmap errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

// Malformed or dimensionally inconsistent input.
class InvalidInput : public Error {
public:
  using Error::Error;
};

// The operation requires a self-adjoint map (Hermitian Choi matrix).
class NotSelfAdjoint : public Error {
public:
  using Error::Error;
};

// The canonical split is undefined: the positive part of the Choi matrix
// vanishes, i.e. -phi is completely positive. This is a legitimate analysis
// outcome, not a failure.
class NegativeOfCpMap : public Error {
public:
  using Error::Error;
};

// Witness extension preconditions not met.
class WitnessInapplicable : public Error {
public:
  using Error::Error;
};

} // namespace posmap

#endif
