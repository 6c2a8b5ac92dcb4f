#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solvgraph {

/// Malformed group-spec text. `position()` is the 0-based offset of the
/// offending character.
class SpecError : public std::runtime_error
{
public:
  SpecError(const std::string &message, std::size_t position)
  : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
    _position(position)
  {}

  std::size_t position() const noexcept { return _position; }

private:
  std::size_t _position;
};

/// Group enumeration would exceed the configured order cap.
class CapExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// The solvable graph is only defined for non-solvable groups.
class SolvableGroupError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied deadline elapsed before the computation finished.
class Timeout : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always an implementation bug.
class InternalError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

} // namespace solvgraph
