#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tough {

enum class Errc {
  invalid_order,
  empty_remainder,
  invalid_input,
  invalid_partition,
  not_equitable,
  parse,
  size,
  domain,
  hypothesis,
  no_convergence,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Malformed graph6 input. offset is the byte index of the first bad byte
// (or the input length when the string ends too early).
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(Errc::parse, "graph6 byte " + std::to_string(offset) + ": " + what),
        offset_(offset),
        detail_(what) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

}  // namespace tough
