#pragma once

#include <stdexcept>
#include <string>

namespace rough3 {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid caller input: malformed tables or algebra files, unknown
// identifiers, or an exhaustive-enumeration bound exceeded.  The command
// line tool maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Values bound to different universes (or approximation spaces) were
// combined.  Always a programming error on the caller's side.
class UniverseMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace rough3
