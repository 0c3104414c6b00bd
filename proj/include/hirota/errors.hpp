#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hirota {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("polynomial division leaves a nonzero remainder") {}
};

class DenominatorZero : public Error {
 public:
  DenominatorZero() : Error("denominator evaluates to zero") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Parse failure in the polynomial / rational text grammar. `position` is a
/// zero-based byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A map denominator vanished. `denominator` is the 1-based component whose
/// update divides by zero; `step` is the orbit step being computed (0 when the
/// map is applied outside of an orbit).
class SingularHit : public Error {
 public:
  SingularHit(int denominator, int step = 0)
      : Error("singular hit: denominator " + std::to_string(denominator) + " vanishes at step " +
              std::to_string(step)),
        denominator_(denominator),
        step_(step) {}
  int denominator() const noexcept { return denominator_; }
  int step() const noexcept { return step_; }

 private:
  int denominator_;
  int step_;
};

class DerivationFailed : public Error {
 public:
  using Error::Error;
};

class ExtractionMismatch : public Error {
 public:
  using Error::Error;
};

class MissingFactor : public Error {
 public:
  explicit MissingFactor(int t) : Error("IVPP table has no factor for t=" + std::to_string(t)), t_(t) {}
  int t() const noexcept { return t_; }

 private:
  int t_;
};

class DegenerateLevel : public Error {
 public:
  DegenerateLevel() : Error("level-set split is degenerate for this x1") {}
  using Error::Error;
};

class RootNotFound : public Error {
 public:
  using Error::Error;
};

class OutOfPatch : public Error {
 public:
  using Error::Error;
};

class PatchTooSmall : public Error {
 public:
  PatchTooSmall() : Error("patch has no interior octahedron") {}
};

class TrivialNullSpace : public Error {
 public:
  TrivialNullSpace() : Error("Baecklund system has only the zero solution") {}
};

class NotAnEdge : public Error {
 public:
  using Error::Error;
};

class IdentityPair : public Error {
 public:
  IdentityPair() : Error("source and destination corner coincide") {}
};

}  // namespace hirota
