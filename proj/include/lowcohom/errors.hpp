#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lowcohom {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised by the numeric oracle for representations it cannot realise
/// (F4, E6, E7, E8 actions); callers fall back to embedded data.
class UnsupportedConstruction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lowcohom
