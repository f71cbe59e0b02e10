#ifndef AFFSG_ERRORS_HPP
#define AFFSG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace affsg {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatches, zero/duplicate generators,
/// invalid term orders, unparsable files.
class input_error : public error {
public:
  using error::error;
};

/// An operation was called with arguments violating its stated precondition
/// (e.g. a base vector that is not a nonzero member of the semigroup).
class precondition_error : public error {
public:
  using error::error;
};

/// An operation requires a prior result that is not available
/// (e.g. a gap listing without a positive finiteness verdict).
class state_error : public error {
public:
  using error::error;
};

/// A consistency check that must hold by theory failed; indicates a bug.
class internal_error : public error {
public:
  using error::error;
};

} // namespace affsg

#endif
