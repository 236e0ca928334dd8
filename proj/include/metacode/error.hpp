#pragma once

#include <stdexcept>
#include <string>

namespace metacode {

enum class ErrorKind {
  NonPrimeCharacteristic,
  NotCoprime,
  EvenQ,
  HypothesisViolated,
  NotNormal,
  NotCoprimeOrders,
  InconsistentPresentation,
  NotGenericFamily,
  BadFamilyIndex,
  TooLarge,
  RegimeMismatch,
  BadParameters,
  WrongCharacteristic,
  QuotientNotCyclic,
  ZeroCode,
  SchemaError,
  Usage,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& msg)
      : std::runtime_error(std::string(to_string(k)) + ": " + msg), kind_(k) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace metacode
