#pragma once

#include <stdexcept>
#include <string>

namespace csg {

enum class ErrorKind {
  LevelMismatch,
  IndexOutOfRange,
  InvalidElement,
  Parse,
  IncompatibleHorn,
  NotComposable,
  FillerFailure,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] void throw_level_mismatch(const char* op, std::size_t lhs, std::size_t rhs);
[[noreturn]] void throw_index_out_of_range(const char* op, std::size_t index, std::size_t bound);

}  // namespace csg
