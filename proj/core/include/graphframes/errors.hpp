#pragma once

#include <stdexcept>
#include <string>

namespace graphframes {

// Bad caller-supplied data: malformed files, invalid graph structure,
// arguments outside an operation's domain. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical self-check failed: eigensolver stall, or the computed
// spectrum disagrees with exact combinatorial structure beyond tolerance.
// Maps to CLI exit code 3.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace graphframes
