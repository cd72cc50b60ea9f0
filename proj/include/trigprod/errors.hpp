#pragma once

#include <stdexcept>
#include <string>

namespace trigprod {

// Base of every library failure. Two subtrees matter for callers: InputError
// (the caller handed us something invalid) and ResourceError (a configured
// cap or a convergence limit was hit). The CLI maps them to exit codes 2 / 3.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
  using Error::Error;
};

class ResourceError : public Error {
public:
  using Error::Error;
};

// Evaluation requested at a zero of the product, where log|1 - e(a theta)|
// diverges. Grid scans skip these points; direct evaluation signals.
class SingularPoint : public Error {
public:
  using Error::Error;
};

class ParseError : public InputError {
public:
  using InputError::InputError;
};

class SetNotInRange : public InputError {
public:
  using InputError::InputError;
};

class AllocationCap : public ResourceError {
public:
  using ResourceError::ResourceError;
};

class DegreeCap : public ResourceError {
public:
  using ResourceError::ResourceError;
};

class SumCap : public ResourceError {
public:
  using ResourceError::ResourceError;
};

class Overflow : public ResourceError {
public:
  using ResourceError::ResourceError;
};

class EmptySample : public ResourceError {
public:
  using ResourceError::ResourceError;
};

class NonFinite : public ResourceError {
public:
  using ResourceError::ResourceError;
};

}  // namespace trigprod
