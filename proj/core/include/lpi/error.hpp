#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lpi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad vertex id, malformed path, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 or edge-list input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An exact search ran out of its wall-clock or size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline unlimited() { return Deadline{}; }
  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.until_ = Clock::now() + budget;
    return d;
  }

  bool limited() const { return until_.has_value(); }
  bool expired() const { return until_ && Clock::now() >= *until_; }

  void check(std::string_view what) const {
    if (expired()) {
      throw BudgetExceeded(std::string(what) + ": wall-clock budget exceeded");
    }
  }

 private:
  std::optional<Clock::time_point> until_;
};

}  // namespace lpi
