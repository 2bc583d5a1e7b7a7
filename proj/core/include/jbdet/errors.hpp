#pragma once

#include <stdexcept>
#include <string>

namespace jbdet {

// Input violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularError : public NumericError {
 public:
  using NumericError::NumericError;
};

// The library has no algorithm for this input (for example dt of a
// non-normal octonionic element without a supplied reduction).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConsistencyError : public std::logic_error {
 public:
  ConsistencyError(const std::string& what, double worst_residual)
      : std::logic_error(what), worst_residual_(worst_residual) {}
  double worst_residual() const { return worst_residual_; }

 private:
  double worst_residual_;
};

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ReductionError : public std::runtime_error {
 public:
  ReductionError(const std::string& what, std::string case_path)
      : std::runtime_error(what + " [" + case_path + "]"), case_path_(std::move(case_path)) {}
  const std::string& case_path() const { return case_path_; }

 private:
  std::string case_path_;
};

}  // namespace jbdet
