#pragma once
#include <string>

#include "crossball/assemble.hpp"

namespace crossball {

// One concrete breach of a tautness condition. rule is a stable machine
// token; witness names the offending arc, circle or edge.
struct TautViolation {
  std::string rule;
  std::string witness;
  bool operator==(const TautViolation&) const = default;
};

// Necessary conditions for a position to be a complexity-minimal essential
// one. Empty result means consistent, not certified minimal. Conditions that
// depend on alternatingness are skipped for non-alternating diagrams.
std::vector<TautViolation> taut_check(const SurfacePosition& p);

}  // namespace crossball
