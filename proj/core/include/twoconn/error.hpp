#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twoconn {

/// Input outside the mathematical domain of an operation (c <= 2, odd degree sum, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive search would exceed its configured size guard.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A broken internal invariant. Seeing one of these means a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Rejection sampling gave up. Carries the attempt and acceptance counters so
/// callers can still use the empirical acceptance rate.
class RetryExhausted : public std::runtime_error {
 public:
  RetryExhausted(const std::string& what, std::int64_t attempts, std::int64_t accepted)
      : std::runtime_error(what), attempts_(attempts), accepted_(accepted) {}

  std::int64_t attempts() const { return attempts_; }
  std::int64_t accepted() const { return accepted_; }

 private:
  std::int64_t attempts_;
  std::int64_t accepted_;
};

}  // namespace twoconn
