#pragma once

#include <stdexcept>
#include <string>

namespace tacnode {

// Input violates an operation's precondition. CLI exit code 2.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// All counts zero: the derived tacnode order would be m = 1.
class EmptyTuple : public ContractViolation {
 public:
  EmptyTuple() : ContractViolation("empty tuple: all counts are zero (m = 1 < 2)") {}
};

// Classification requested where the A_k criterion does not apply (beta_0 = 0 on H_p).
class Degenerate : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

// Floating-point computation did not produce a trustworthy answer. CLI exit code 3.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoConvergence : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class PathLiftingFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

// A threshold decision fell inside its dead zone. CLI exit code 4.
class Ambiguity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AmbiguousClustering : public Ambiguity {
 public:
  using Ambiguity::Ambiguity;
};

class AmbiguousStructuralZero : public Ambiguity {
 public:
  using Ambiguity::Ambiguity;
};

}  // namespace tacnode
