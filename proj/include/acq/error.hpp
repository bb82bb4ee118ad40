#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace acq {

enum class ErrorKind {
  SelfLoop,
  VertexOutOfRange,
  TooSmall,
  TooLarge,
  Disconnected,
  InvalidMatching,
  ColorOverflow,
  ContourInvariant,
  DegenerateAdjacent,
  BudgetExceeded,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library. `detail()` carries a round index for
// InvalidMatching and the number of explored states for BudgetExceeded.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> detail = std::nullopt)
      : std::runtime_error(what), kind_(kind), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> detail_;
};

}  // namespace acq
