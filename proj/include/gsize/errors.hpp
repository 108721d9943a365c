#pragma once

#include <stdexcept>
#include <string>

namespace gsize {

// Invalid parameters or incompatible estimator/sampler choices.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or unusable input data (edge lists, sample files, weights).
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public data_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : data_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gsize
