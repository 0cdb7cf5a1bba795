#pragma once

#include <stdexcept>
#include <string>

namespace ppalg {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("singular matrix") {}
};

class DuplicateNode : public Error {
 public:
  using Error::Error;
};

class InvalidType : public Error {
 public:
  using Error::Error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class NotInCatalog : public Error {
 public:
  using Error::Error;
};

class NonSplitField : public Error {
 public:
  using Error::Error;
};

class ProjectiveDirection : public Error {
 public:
  using Error::Error;
};

class NotRigid : public Error {
 public:
  using Error::Error;
};

class NotCompleteRigid : public Error {
 public:
  using Error::Error;
};

class NonPolynomialCount : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace ppalg
