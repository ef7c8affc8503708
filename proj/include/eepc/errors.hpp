#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace eepc {

// A model whose existence condition fails (as opposed to malformed input).
// `condition()` names the violated inequality so callers can report it.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(std::string condition, const std::string& detail)
      : std::runtime_error(detail), condition_(std::move(condition)) {}

  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

}  // namespace eepc
