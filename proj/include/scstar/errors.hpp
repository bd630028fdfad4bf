#pragma once

#include <stdexcept>
#include <string>

namespace scstar {

// Bad caller input: maps to CLI exit code 2.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Quadrature or other numeric breakdown: exit code 3.
struct numeric_error : std::runtime_error {
  double achieved = 0.0;
  explicit numeric_error(const std::string& what, double est = 0.0)
      : std::runtime_error(what), achieved(est) {}
};

struct branch_point_error : usage_error {
  using usage_error::usage_error;
};

struct singular_point_error : usage_error {
  using usage_error::usage_error;
};

struct geometry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct grazing_error : numeric_error {
  explicit grazing_error(const std::string& what) : numeric_error(what) {}
};

struct fold_error : numeric_error {
  explicit fold_error(const std::string& what) : numeric_error(what) {}
};

// Internal invariant broken; indicates a bug rather than bad input.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace scstar
