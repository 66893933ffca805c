#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fimp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// interval_core
class InvalidInterval : public Error {
 public:
  using Error::Error;
};
class DivisionByIntervalContainingZero : public Error {
 public:
  using Error::Error;
};
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// func_dsl
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class UnsupportedKink : public Error {
 public:
  using Error::Error;
};
class NotSmoothHere : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string token, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + " near '" + token +
              "': " + message),
        position_(position),
        token_(std::move(token)) {}

  std::size_t position() const { return position_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t position_;
  std::string token_;
};

// geometry
class PointNotInSet : public Error {
 public:
  using Error::Error;
};
class MalformedProblem : public Error {
 public:
  using Error::Error;
};

// pareto_engine
class AssumptionViolated : public Error {
 public:
  using Error::Error;
};
class TargetNotInCandidates : public Error {
 public:
  using Error::Error;
};
class InfeasibleCandidate : public Error {
 public:
  using Error::Error;
};
class EmptyFeasibleGrid : public Error {
 public:
  using Error::Error;
};

// certify
class PointInfeasible : public Error {
 public:
  using Error::Error;
};
class SampleOutsideS : public Error {
 public:
  using Error::Error;
};

// duality_lab
class DualPointNotPrimalFeasible : public Error {
 public:
  using Error::Error;
};

// cli_reports
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace fimp
