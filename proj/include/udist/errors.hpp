#pragma once

#include <stdexcept>
#include <string>

namespace udist {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: broken invariants, unknown labels, bad preconditions.
class validation_error : public error {
public:
  explicit validation_error(const std::string& what) : error(what) {}
};

/// Conditioning on an event or factor set with zero mass.
class null_conditioning_error : public error {
public:
  explicit null_conditioning_error(const std::string& what) : error(what) {}
};

/// Input carries no usable preference content (all-zero weights, constant table).
class degenerate_error : public error {
public:
  explicit degenerate_error(const std::string& what) : error(what) {}
};

/// A guard against computations that would not terminate at a useful scale.
class resource_error : public error {
public:
  explicit resource_error(const std::string& what) : error(what) {}
};

/// Requested decomposition does not exist for the given function.
class decomposition_error : public error {
public:
  explicit decomposition_error(const std::string& what) : error(what) {}
};

/// Utilities are not integer multiples of any detectable quantum.
class non_quantizable_error : public error {
public:
  explicit non_quantizable_error(const std::string& what) : error(what) {}
};

} // namespace udist
