#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lgpmh {

/// Limits for exhaustive searches. Zero means unlimited.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
  double timeout_seconds = 0;
};

/// Result state of an exhaustive search. `inconclusive` means a budget ran
/// out and is never a proof of absence.
enum class Outcome { found, absent, inconclusive };

std::string_view to_string(Outcome o) noexcept;

template <class T>
struct SearchResult {
  Outcome outcome = Outcome::absent;
  std::optional<T> witness;
  std::uint64_t nodes = 0;

  bool found() const noexcept { return outcome == Outcome::found; }
  bool absent() const noexcept { return outcome == Outcome::absent; }
  bool inconclusive() const noexcept { return outcome == Outcome::inconclusive; }
};

/// Thrown by operations that return a plain value when their search budget
/// runs out before a verdict.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Node counter shared by the searches of one logical query.
class SearchMeter {
 public:
  explicit SearchMeter(SearchBudget budget = {})
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  /// Counts one node; returns false once the budget is exhausted.
  bool tick() {
    ++nodes_;
    if (exhausted_) return false;
    if (budget_.max_nodes && nodes_ > budget_.max_nodes) exhausted_ = true;
    if (budget_.timeout_seconds > 0 && (nodes_ & 0xfff) == 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > budget_.timeout_seconds) exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace lgpmh
