#pragma once

#include <stdexcept>
#include <string>

namespace lgdual {

// Malformed input: unparsable text, wrong JSON shape, unknown labels.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates an operation's mathematical precondition.
// `condition` names the violated condition (e.g. "D4", "A∩B=∅").
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string condition, const std::string& what)
      : std::runtime_error(what), condition_(std::move(condition)) {}

  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

}  // namespace lgdual
