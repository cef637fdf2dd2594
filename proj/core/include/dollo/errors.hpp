#pragma once

#include <stdexcept>
#include <string>

namespace dollo {

/// Malformed textual input (Newick syntax, bad file contents).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input that violates a semantic precondition
/// (wrong character length, unknown leaf label, non-decomposable node, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A request exceeds a documented resource cap (exhaustive enumerations
/// and brute-force sweeps refuse to run instead of silently truncating).
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dollo
