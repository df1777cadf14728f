#pragma once

#include <stdexcept>
#include <string>

namespace coalg {

/// Every failure the library reports carries a short machine-readable kind
/// (e.g. "ring-mismatch", "cap-exceeded") next to the human message.  The CLI
/// surfaces both verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace coalg
