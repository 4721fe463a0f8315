#pragma once
#include <stdexcept>

namespace crossball {

// Input that cannot be read as a diagram or position at all: bad syntax,
// wrong edge multiplicities, impossible strand orientations, nonplanar maps.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a structural invariant of the operation.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace crossball
