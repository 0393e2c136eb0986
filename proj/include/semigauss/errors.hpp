#pragma once

#include <stdexcept>
#include <string>

namespace semigauss {

enum class ErrorKind {
  zero_input,
  all_zero_input,
  not_factorial,
  undecidable_instance,
  unsupported_instance,
  non_prime,
  zero_excluded,
  zero_denominator,
  inverse_of_zero,
  zero_polynomial,
  mixed_instance,
  instance_property,
  non_primitive,
  outside_semiring,
  retry_cap,
  syntax,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI,
/// tests) can branch without parsing messages.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error in polynomial text; offset is the byte position in the
/// original input.
class ParseError : public AlgebraError {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : AlgebraError(ErrorKind::syntax,
                     "parse error at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace semigauss
