#pragma once

#include <stdexcept>
#include <string>

namespace vplin {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DomainError : public Error {
public:
  using Error::Error;
};

class PoleError : public Error {
public:
  using Error::Error;
};

class QuadratureFailure : public Error {
public:
  using Error::Error;
};

class DivergentMoment : public Error {
public:
  using Error::Error;
};

class TailClassMismatch : public Error {
public:
  using Error::Error;
};

class BracketFailure : public Error {
public:
  using Error::Error;
};

class RootCountMismatch : public Error {
public:
  using Error::Error;
};

class StabilityViolation : public Error {
public:
  using Error::Error;
};

class UnderResolvedCurve : public Error {
public:
  using Error::Error;
};

class NoConvergence : public Error {
public:
  using Error::Error;
};

class ResidualTooLarge : public Error {
public:
  using Error::Error;
};

class BracketViolation : public Error {
public:
  using Error::Error;
};

class EnvelopeViolation : public Error {
public:
  using Error::Error;
};

class ContourTooHigh : public Error {
public:
  using Error::Error;
};

class MissingDispersionPoint : public Error {
public:
  using Error::Error;
};

class IdentityViolation : public Error {
public:
  using Error::Error;
};

class MeshMismatch : public Error {
public:
  using Error::Error;
};

class NonSeparable : public Error {
public:
  using Error::Error;
};

class DegenerateFit : public Error {
public:
  using Error::Error;
};

}  // namespace vplin
