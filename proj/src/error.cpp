#include "sylowlab/error.hpp"

#include <sstream>

namespace sylowlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidPermutation: return "InvalidPermutation";
    case ErrorKind::kClosureExceedsCap: return "ClosureExceedsCap";
    case ErrorKind::kNotAGroup: return "NotAGroup";
    case ErrorKind::kInvalidElement: return "InvalidElement";
    case ErrorKind::kEnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::kParentMismatch: return "ParentMismatch";
    case ErrorKind::kNotASubgroup: return "NotASubgroup";
    case ErrorKind::kNotNormal: return "NotNormal";
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kPrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorKind::kPrimePowerDoesNotDivideOrder: return "PrimePowerDoesNotDivideOrder";
    case ErrorKind::kNotAPGroup: return "NotAPGroup";
    case ErrorKind::kNotAPSubgroup: return "NotAPSubgroup";
    case ErrorKind::kTrivialSubgroup: return "TrivialSubgroup";
    case ErrorKind::kOrderMismatch: return "OrderMismatch";
    case ErrorKind::kNotCoprime: return "NotCoprime";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kValidationError: return "ValidationError";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

namespace {

std::string describe_not_a_group(const std::string& axiom, const std::array<std::uint32_t, 3>& w) {
  std::ostringstream os;
  os << axiom << " fails at (" << w[0] << ", " << w[1] << ", " << w[2] << ")";
  return os.str();
}

std::string describe_parse(std::size_t offset, const std::set<std::string>& expected,
                           const std::string& found) {
  std::ostringstream os;
  os << "at offset " << offset << ": expected ";
  bool first = true;
  for (const auto& e : expected) {
    os << (first ? "" : " | ") << e;
    first = false;
  }
  os << ", found " << (found.empty() ? "end of input" : "'" + found + "'");
  return os.str();
}

}  // namespace

NotAGroupError::NotAGroupError(std::string axiom, std::array<std::uint32_t, 3> witness)
    : Error(ErrorKind::kNotAGroup, describe_not_a_group(axiom, witness)),
      axiom_(std::move(axiom)),
      witness_(witness) {}

ParseError::ParseError(std::size_t offset, std::set<std::string> expected, const std::string& found)
    : Error(ErrorKind::kParseError, describe_parse(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace sylowlab
