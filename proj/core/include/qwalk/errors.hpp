#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Base error carrying a stable machine-readable code string. The CLI maps
// these to its JSON error object and exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct NonUnitaryError : Error {
  explicit NonUnitaryError(const std::string& m) : Error("NonUnitary", m) {}
};

struct DegenerateCoinError : Error {
  explicit DegenerateCoinError(const std::string& m) : Error("DegenerateCoin", m) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error("DomainError", m) {}
};

struct WindowOverflowError : Error {
  explicit WindowOverflowError(const std::string& m) : Error("WindowOverflow", m) {}
};

struct ResolutionTooLowError : Error {
  explicit ResolutionTooLowError(const std::string& m) : Error("ResolutionTooLow", m) {}
};

struct TailNotConvergedError : Error {
  explicit TailNotConvergedError(const std::string& m) : Error("TailNotConverged", m) {}
};

struct SingularDiagonalizerError : Error {
  explicit SingularDiagonalizerError(const std::string& m) : Error("SingularDiagonalizer", m) {}
};

struct ConsistencyFailureError : Error {
  explicit ConsistencyFailureError(const std::string& m) : Error("ConsistencyFailure", m) {}
};

}  // namespace qwalk
