#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

// Bad user input: malformed files, out-of-range parameters, invalid
// permutations. The CLI maps this (and std::domain_error / std::range_error)
// to exit code 2.
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// A series truncation failed to certify the requested tolerance within the
// term cap. Raise max_terms or loosen the tolerance.
class truncation_error : public std::runtime_error {
 public:
  explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ringlab
