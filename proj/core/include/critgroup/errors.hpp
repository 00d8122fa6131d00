#pragma once

#include <stdexcept>
#include <string>

namespace critgroup {

/// Malformed input: bad facet lists, unparsable files, mismatched dimensions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dimension index outside the range an operation accepts.
class DimensionError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Base for violated mathematical hypotheses (the computation would be unjustified).
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotATree : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

/// The supplied spanning tree has nontrivial codimension-one torsion.
class TreeHasTorsion : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

}  // namespace critgroup
