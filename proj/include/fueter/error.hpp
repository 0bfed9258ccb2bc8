#pragma once

#include <stdexcept>
#include <string>

namespace fueter {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A paravector (or ring element) with zero norm was inverted.
class ZeroNorm : public Error {
 public:
  using Error::Error;
};

/// The constant term of a jet is not invertible.
class NonInvertibleConstantTerm : public ZeroNorm {
 public:
  using ZeroNorm::ZeroNorm;
};

/// s lies on the sphere [x]; every Cauchy-type kernel is singular there.
class SingularKernel : public ZeroNorm {
 public:
  SingularKernel() : ZeroNorm("singular: s in [x]") {}
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// A derivative was requested beyond the truncation order of a jet.
class OrderExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fueter
