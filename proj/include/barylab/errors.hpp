#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace barylab {

/// Base class for every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix size outside the supported desk-scale range.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Invalid family/rank combination or a root system that fails validation.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Input matrix too ill-conditioned for a stable decomposition.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

/// A numerically non-SPD intermediate where an SPD matrix was required.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Discrete measure too concentrated: the functional Hessian is singular.
class DegenerateMeasureError : public Error {
 public:
  using Error::Error;
};

/// Newton iteration failed to reach the gradient tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::string trace)
      : Error(what), trace_(std::move(trace)) {}
  const std::string& trace() const { return trace_; }

 private:
  std::string trace_;
};

/// det(Q2|_S) below the representable guard.
class DegenerateRatioError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration requested beyond the supported rank.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Hall matching deficiency: carries the violating species subset.
class InfeasibleFrameError : public Error {
 public:
  InfeasibleFrameError(const std::string& what, std::vector<int> deficient_set,
                       int union_size, int demand_sum)
      : Error(what),
        deficient_set_(std::move(deficient_set)),
        union_size_(union_size),
        demand_sum_(demand_sum) {}
  const std::vector<int>& deficient_set() const { return deficient_set_; }
  int union_size() const { return union_size_; }
  int demand_sum() const { return demand_sum_; }

 private:
  std::vector<int> deficient_set_;
  int union_size_ = 0;
  int demand_sum_ = 0;
};

}  // namespace barylab
