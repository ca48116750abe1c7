#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Every failure the library can signal. The CLI maps each kind to its own
// exit code, so keep the list in sync with tools/hecke_cli.cpp.
enum class ErrorKind {
  InvalidRootSystem,
  InvalidVertex,
  Arithmetic,
  SingularEvaluation,
  OrbitTooLarge,
  NotATableau,
  NotAdmissible,
  DegenerateSeparation,
  PlaceCollisionAtLimit,
  IndexOutOfRange,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hecke
