#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace dgt {

/// Dense node index, stable across every snapshot of one dataset.
using NodeId = std::uint32_t;

/// Community label used during the game. Never reused within one run.
using CommunityId = std::uint32_t;

/// Arbitrary community label in an evaluated partition.
using Label = std::uint64_t;

/// Node -> single community label. Ordered so iteration is deterministic.
using Partition = std::map<NodeId, Label>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or record.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Invalid user configuration (flags, parameters, missing inputs).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed (audit violation, non-improving move).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace dgt
