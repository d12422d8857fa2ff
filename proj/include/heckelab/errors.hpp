#pragma once

#include <stdexcept>
#include <string>

namespace heckelab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonUnit : public Error {
 public:
  using Error::Error;
};

// Result would need digits that were never carried.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class Unclassified : public Error {
 public:
  using Error::Error;
};

class NotInFiber : public Error {
 public:
  using Error::Error;
};

class ZeroSpace : public Error {
 public:
  using Error::Error;
};

class NonSymmetric : public Error {
 public:
  using Error::Error;
};

class NonIntegerSpec : public Error {
 public:
  using Error::Error;
};

class NotMonic : public Error {
 public:
  using Error::Error;
};

class TrivialCharacter : public Error {
 public:
  using Error::Error;
};

class SpecMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedCharacter : public Error {
 public:
  using Error::Error;
};

}  // namespace heckelab
