#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input text could not be decoded. `offset` is a byte (or line) position.
class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : error(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// Request exceeds a documented size cap (vertex count, edge count, ...).
class unsupported_size_error : public error {
public:
  using error::error;
};

}  // namespace ramsey
