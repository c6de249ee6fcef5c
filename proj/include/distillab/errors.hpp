#pragma once

#include <stdexcept>
#include <string>

namespace distillab {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operand dimensions do not line up. Message names both shapes.
struct ShapeError : Error {
    using Error::Error;
};

// Argument outside the operation's domain (e.g. temperature <= 0).
struct DomainError : Error {
    using Error::Error;
};

// Infeasible epoch allocation request.
struct AllocationError : Error {
    using Error::Error;
};

// Training plan inconsistent with the available checkpoints or specs.
struct PlanError : Error {
    using Error::Error;
};

// Malformed input file; message carries the line number where known.
struct ParseError : Error {
    using Error::Error;
};

// Checkpoint payload failed its checksum or magic check.
struct IntegrityError : Error {
    using Error::Error;
};

// Checkpoint written by an unsupported format version.
struct VersionError : Error {
    using Error::Error;
};

// Iterative solver exhausted its iteration cap; message reports the residual.
struct ConvergenceError : Error {
    using Error::Error;
};

// An API contract was violated (e.g. backward called with a stale cache).
struct ContractError : Error {
    using Error::Error;
};

// Filesystem failure; message carries the offending path.
struct IoError : Error {
    using Error::Error;
};

// Bad experiment configuration or CLI usage.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace distillab
