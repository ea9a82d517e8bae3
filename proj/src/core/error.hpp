#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace gsp {

// Domain failure with a stable code and a JSON witness describing the offending input.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, nlohmann::json witness = nullptr)
      : std::runtime_error(message), code_(std::move(code)), witness_(std::move(witness)) {}

  const std::string& code() const { return code_; }
  const nlohmann::json& witness() const { return witness_; }

 private:
  std::string code_;
  nlohmann::json witness_;
};

}  // namespace gsp
