#pragma once

#include <stdexcept>
#include <string>

namespace ranum {

// Violated precondition or unsupported mathematical domain.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed literal (base, value, word or stream text).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; indicates a bug, not a caller error.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ranum
