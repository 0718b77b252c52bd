#pragma once

#include <chrono>
#include <optional>

#include "omegasynth/errors.hpp"

namespace omegasynth {

/// Cooperative time budget. Long-running loops call check() at safe points
/// and unwind with TimeoutError once the budget is spent.
class Deadline {
public:
  Deadline() = default;

  static Deadline never() { return Deadline{}; }

  static Deadline after_seconds(double secs) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(secs));
    return d;
  }

  bool expired() const {
    return at_.has_value() && std::chrono::steady_clock::now() >= *at_;
  }

  void check(const char* phase) const {
    if (expired()) throw TimeoutError(phase);
  }

private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace omegasynth
