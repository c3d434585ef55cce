#pragma once

#include <stdexcept>
#include <string>

namespace cyclosc {

// Base for every domain error. `code()` is the stable identifier written into
// structured error objects by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// beta_mu <= -mu: the bosonic Fock representation does not exist.
class FockConditionViolated : public Error {
 public:
  explicit FockConditionViolated(int mu)
      : Error("FockConditionViolated",
              "Fock existence condition violated: beta_" + std::to_string(mu) + " <= -" + std::to_string(mu)),
        mu_(mu) {}
  int mu() const noexcept { return mu_; }

 private:
  int mu_;
};

class InvalidParams : public Error {
 public:
  explicit InvalidParams(const std::string& what) : Error("InvalidParams", what) {}
};

class NotRealResult : public Error {
 public:
  explicit NotRealResult(const std::string& what) : Error("NotRealResult", what) {}
};

class DegreeTooLarge : public Error {
 public:
  explicit DegreeTooLarge(const std::string& what) : Error("DegreeTooLarge", what) {}
};

class WrongLambda : public Error {
 public:
  WrongLambda(int expected, int got)
      : Error("WrongLambda",
              "construction needs lambda = " + std::to_string(expected) + ", got " + std::to_string(got)) {}
};

class InadmissibleParams : public Error {
 public:
  explicit InadmissibleParams(const std::string& what) : Error("InadmissibleParams", what) {}
};

class ConstraintViolated : public Error {
 public:
  explicit ConstraintViolated(const std::string& what) : Error("ConstraintViolated", what) {}
};

class Mu2Infeasible : public Error {
 public:
  Mu2Infeasible()
      : Error("Mu2Infeasible",
              "orthosupersymmetric family mu = 2 needs alpha_0 = -1, which violates the Fock condition") {}
};

class NotSupported : public Error {
 public:
  explicit NotSupported(const std::string& what) : Error("NotSupported", what) {}
};

class SearchInconclusive : public Error {
 public:
  explicit SearchInconclusive(double best_residual)
      : Error("SearchInconclusive",
              "ansatz search did not reach the residual threshold; best residual " + std::to_string(best_residual)),
        best_(best_residual) {}
  double best_residual() const noexcept { return best_; }

 private:
  double best_;
};

}  // namespace cyclosc
