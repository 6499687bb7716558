#pragma once

#include <stdexcept>
#include <string>

namespace finref {

enum class ErrorKind {
  NotATopology,
  SizeLimit,
  EmptySubset,
  InvalidPartition,
  UnknownAxiom,
  MethodUnsupported,
  ReflectionNotInClass,
  NotNested,
  NotT0Contained,
  NotACongruence,
  KernelNotCongruence,
  NotAHomomorphism,
  SignatureMismatch,
  NotMaltsev,
  UnboundVariable,
  InputError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace finref
