#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace seqcong {

// Base for every error the library reports. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A part or an intermediate sum does not fit in a 64-bit part.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// The input is outside the domain of the operation. When the failure is tied
// to a position in the partition, `index()` holds it (1-based).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : Error(what), index_(index) {}

  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  std::optional<std::size_t> index_;
};

// A coefficient vector is not in canonical form (trailing zero).
class CanonicalFormError : public Error {
 public:
  using Error::Error;
};

// A multiset of parts to remove is not contained in the partition.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

// A GenSpec (or a sequence inside it) cannot serve the requested operation.
class SpecError : public Error {
 public:
  using Error::Error;
};

// A sequence term beyond the configured horizon was needed.
class HorizonError : public SpecError {
 public:
  using SpecError::SpecError;
};

}  // namespace seqcong
