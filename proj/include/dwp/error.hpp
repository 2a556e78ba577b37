#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dwp {

enum class ErrorKind {
  BadInput,
  BadShape,
  NotAGroup,
  GroupTooLarge,
  BadPermutation,
  NotInSubgroup,
  BadBraid,
  StrandMismatch,
  LengthMismatch,
  NotAFixedPoint,
  HNotInCentralizer,
  SearchTooLarge,
  NotPrime,
  GroupOrderDivisible,
  ComponentMismatch,
  DegreeTooLarge,
  DimMismatch,
  FieldMismatch,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::NotInSubgroup: return "NotInSubgroup";
    case ErrorKind::BadBraid: return "BadBraid";
    case ErrorKind::StrandMismatch: return "StrandMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotAFixedPoint: return "NotAFixedPoint";
    case ErrorKind::HNotInCentralizer: return "HNotInCentralizer";
    case ErrorKind::SearchTooLarge: return "SearchTooLarge";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::GroupOrderDivisible: return "GroupOrderDivisible";
    case ErrorKind::ComponentMismatch: return "ComponentMismatch";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
  }
  return "Unknown";
}

/// Resource caps exit with 3, everything else the caller got wrong exits with 2.
constexpr bool is_resource_error(ErrorKind kind) {
  return kind == ErrorKind::SearchTooLarge || kind == ErrorKind::GroupTooLarge;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dwp
