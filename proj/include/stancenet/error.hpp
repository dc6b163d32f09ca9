#pragma once

#include <stdexcept>
#include <string>

namespace stancenet {

enum class ErrorKind {
  Input,  // unreadable or malformed input
  Stage,  // a pipeline stage could not produce its output
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error input_error(const std::string& what) {
  return Error(ErrorKind::Input, what);
}

inline Error stage_error(const std::string& what) {
  return Error(ErrorKind::Stage, what);
}

}  // namespace stancenet
