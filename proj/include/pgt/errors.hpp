#pragma once

#include <stdexcept>
#include <string>

namespace pgt {

// Caller violated an operation's precondition. The CLI maps this to exit code 2.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation at a pole of a meromorphic function.
class pole_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace pgt
