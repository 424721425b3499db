#pragma once

#include <stdexcept>
#include <string>

namespace disjdom {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// input parsing
struct MalformedLineError : Error { using Error::Error; };
struct BadIndexError : Error { using Error::Error; };
struct NotATreeError : Error { using Error::Error; };
struct OutOfRangeEntryError : Error { using Error::Error; };
struct MissingStatusError : Error { using Error::Error; };

// size guards
struct SizeCapExceededError : Error { using Error::Error; };
struct CapExceededError : Error { using Error::Error; };
struct OrderTooSmallError : Error { using Error::Error; };

// labeled-tree operations
struct WrongStatusError : Error { using Error::Error; };
struct PreconditionViolatedError : Error { using Error::Error; };
struct NotALeafError : Error { using Error::Error; };
struct WrongFamilyError : Error { using Error::Error; };

}  // namespace disjdom
