#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mlfb {

enum class ErrorCode {
  Malformed,
  DimensionMismatch,
  NonCoprime,
  NonPositive,
  NotSimplicial,
  NotUnimodular,
  Infeasible,
  IndexOutOfRange,
  NotLatticeFree,
  NotMaximal,
  ReductionStuck,
  BudgetExceeded,
  BoxTooLarge,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_budget() const noexcept {
    return code_ == ErrorCode::BudgetExceeded || code_ == ErrorCode::BoxTooLarge;
  }

 private:
  ErrorCode code_;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Work counter shared by the enumeration routines. Every visited node or
// lattice point is charged; exceeding the limit throws BudgetExceeded.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  void charge(std::uint64_t units = 1) {
    used_ += units;
    if (used_ > limit_) {
      throw Error(ErrorCode::BudgetExceeded,
                  "enumeration budget of " + std::to_string(limit_) + " exceeded");
    }
  }

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace mlfb
