#ifndef GARSIDE_ERRORS_HPP
#define GARSIDE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace garside {

// Bad presentation data: asymmetry, bad diagonal, off-diagonal label < 2.
class InvalidMatrixError : public std::runtime_error {
public:
  explicit InvalidMatrixError(const std::string& what) : std::runtime_error(what) {}
};

// Catalog descriptor names an unknown system type.
class UnknownTypeError : public std::runtime_error {
public:
  explicit UnknownTypeError(const std::string& what) : std::runtime_error(what) {}
};

class UnknownGeneratorError : public std::runtime_error {
public:
  explicit UnknownGeneratorError(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZeroError : public std::runtime_error {
public:
  DivisionByZeroError() : std::runtime_error("division by zero in scalar field") {}
};

// A coefficient vector with strictly positive and strictly negative entries
// is not a root.
class MixedSignsError : public std::runtime_error {
public:
  MixedSignsError() : std::runtime_error("vector has mixed coefficient signs; not a root") {}
};

class DegeneratePlaneError : public std::runtime_error {
public:
  DegeneratePlaneError() : std::runtime_error("roots are linearly dependent; no plane") {}
};

// A configurable safety cap was hit.  Enumerations that the theory proves
// finite treat this as a hard error rather than truncating silently.
class CapExceededError : public std::runtime_error {
public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Operand of a simple-lcm computation does not lie in the supported join
// domain (the low set).
class OutsideSupportedFamilyError : public std::runtime_error {
public:
  explicit OutsideSupportedFamilyError(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant the theory guarantees failed at run time
// (join without a unique minimum, closure element escaping the low set,
// family head failing to divide).  Always aborts the computation loudly.
class InternalInvariantError : public std::logic_error {
public:
  explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace garside

#endif
