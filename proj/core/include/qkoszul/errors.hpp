#pragma once

#include <stdexcept>
#include <string>

namespace qkoszul {

/// Arithmetic between scalars of different modes (generic vs. a root of unity,
/// or two different orders). Always a programming error.
class ModeMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An operation was called outside its documented input domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured enumeration/degree/tensor bound would be exceeded.
class BoundExceeded : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Root-of-unity input outside the range where the cohomology rule is known to hold.
class OutOfValidatedRange : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An action computed on tensor representatives does not descend to the quotient.
class NotWellDefined : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Text input could not be parsed. `position` is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace qkoszul
