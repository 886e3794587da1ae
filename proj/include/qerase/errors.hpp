#pragma once

#include <stdexcept>
#include <string>

namespace qerase {

/// Parameter or precondition violation.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested the t -> infinity state of a system without phase decoherence.
class NoStationaryState : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The thermal tail bound asks for more Fock states than the hard cap allows.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series or iteration did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A field state violates the (+1,+1) coherence band or a positivity bound.
class StructureError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qerase
