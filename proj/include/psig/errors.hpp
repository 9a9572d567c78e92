#pragma once

#include <stdexcept>
#include <string>

namespace psig {

/// Element enumeration grew past the configured cap; the group is out of
/// desk scale.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// quotient_group was asked to factor by a non-normal subgroup.
struct NotNormal : std::runtime_error {
  explicit NotNormal(const std::string& what) : std::runtime_error(what) {}
};

/// is_isomorphic refuses groups of order > 64.
struct OrderCapExceeded : std::runtime_error {
  explicit OrderCapExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

/// A structural precondition of an analysis operation does not hold
/// (e.g. the requested Sylow subgroup is not cyclic or not normal).
struct PreconditionFailed : std::runtime_error {
  explicit PreconditionFailed(const std::string& what)
      : std::runtime_error(what) {}
};

/// Corpus file rejected; message carries line and field context.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// verify was asked for a theorem identifier that has no registered runner.
struct UnknownTheorem : std::runtime_error {
  explicit UnknownTheorem(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace psig
