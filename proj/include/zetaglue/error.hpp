#pragma once

#include <stdexcept>
#include <string>

namespace zg {

enum class ErrorKind {
  Validation,            // malformed input, unsupported combination
  Domain,                // argument outside the mathematical domain
  InsufficientSpectrum,  // explicit spectrum too short for the requested accuracy
  NonConvergence,        // a series or root search did not reach its target
  SingularParameter,     // Robin/shift parameter collides with the spectrum
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InsufficientSpectrumError : public Error {
 public:
  InsufficientSpectrumError(const std::string& what, double trusted_cutoff)
      : Error(ErrorKind::InsufficientSpectrum, what), trusted_cutoff_(trusted_cutoff) {}
  /// Largest cutoff up to which the stored spectrum is complete.
  double trusted_cutoff() const noexcept { return trusted_cutoff_; }

 private:
  double trusted_cutoff_;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double achieved)
      : Error(ErrorKind::NonConvergence, what), achieved_(achieved) {}
  double achieved_tolerance() const noexcept { return achieved_; }

 private:
  double achieved_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

}  // namespace zg
