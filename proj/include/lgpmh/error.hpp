#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lgpmh {

/// Broad category of a failed precondition or malformed input.
enum class ErrorKind {
  parameter,     // bad generator tag / parameter
  format,        // malformed graph6 or JSON input
  capacity,      // input exceeds a configured size bound
  structure,     // wrong global structure (disconnected, acyclic, ...)
  precondition,  // operation-specific precondition failed
  parity,        // edge-count parity requirement failed
  lookup,        // referenced vertex or edge does not exist
  shape,         // wrong graph shape for a degree condition
  construction,  // an internal construction produced an invalid object
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// graph6 decoding failure; `offset` is the byte position of the problem.
class FormatError : public Error {
 public:
  FormatError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::format,
              what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace lgpmh
