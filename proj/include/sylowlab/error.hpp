#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sylowlab {

enum class ErrorKind {
  kInvalidPermutation,
  kClosureExceedsCap,
  kNotAGroup,
  kInvalidElement,
  kEnumerationCapExceeded,
  kParentMismatch,
  kNotASubgroup,
  kNotNormal,
  kNotPrime,
  kPrimeDoesNotDivideOrder,
  kPrimePowerDoesNotDivideOrder,
  kNotAPGroup,
  kNotAPSubgroup,
  kTrivialSubgroup,
  kOrderMismatch,
  kNotCoprime,
  kInvalidArgument,
  kParseError,
  kValidationError,
  kIoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the engine. kind() is the stable machine-readable tag.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by group_from_table. witness holds the offending (a, b, c) indices;
// unused slots repeat the last meaningful index.
class NotAGroupError : public Error {
 public:
  NotAGroupError(std::string axiom, std::array<std::uint32_t, 3> witness);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::array<std::uint32_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::array<std::uint32_t, 3> witness_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::set<std::string> expected, const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

}  // namespace sylowlab
