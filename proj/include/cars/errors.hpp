#pragma once

#include <stdexcept>

namespace cars {

// A tail piece of the hull would have infinite area (e.g. the outermost
// tangent slopes away from an unbounded side of the support).
class ImproperProposalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two consecutive tangents are parallel but not the same line, so they have
// no intersection. Cannot happen for a concave log-density.
class DegenerateNodesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested a diagnostic that needs the target normalizer, which is unknown.
class UnavailableDiagnosticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Could not draw a proper initial support set from the given rule.
class InitializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cars
