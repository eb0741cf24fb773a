#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coinmard {

// Input outside an operation's domain (even v, non-coprime coins, bad range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotCoprimeError : public DomainError {
 public:
  NotCoprimeError() : DomainError("not coprime") {}
};

// Raised by frobenius_number when the smaller coin is 1.
class AllRepresentableError : public DomainError {
 public:
  AllRepresentableError() : DomainError("all integers representable") {}
};

// A configured cap (oracle size, matrix order, exponent scan) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

// A mathematical invariant failed. Always a bug or a genuine finding.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace coinmard
