#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "solvgraph/errors.hpp"

namespace solvgraph {

/// Cooperative time limit polled by long-running loops.
class Deadline
{
public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline after(std::chrono::duration<double> budget)
  {
    Deadline d;
    d._at = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }

  bool expired() const { return _at && Clock::now() >= *_at; }

  void check(const std::string &stage) const
  {
    if (expired())
      throw Timeout("deadline reached during " + stage);
  }

private:
  std::optional<Clock::time_point> _at;
};

} // namespace solvgraph
