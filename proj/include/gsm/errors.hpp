#ifndef GSM_ERRORS_HPP
#define GSM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gsm {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by a value that is zero to working precision.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// The supplied characteristic is not a prime >= 2.
class InvalidPrime : public Error {
public:
    using Error::Error;
};

/// A result's valuation or digits cannot be separated from precision noise.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

/// Malformed or out-of-contract input (degrees, coefficient shapes, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Residue field enumeration would exceed the p^f cap.
class FieldTooLarge : public Error {
public:
    using Error::Error;
};

/// Inversion hit a nontrivial common factor with the defining polynomial.
class ZeroDivisorDetected : public Error {
public:
    using Error::Error;
};

/// The uniformizer search strategy was exhausted for this field.
class UniformizerNotFound : public Error {
public:
    using Error::Error;
};

/// Residue of an element with negative valuation was requested.
class NotIntegral : public Error {
public:
    using Error::Error;
};

/// A required root does not exist in the target field.
class NoRootInField : public Error {
public:
    using Error::Error;
};

/// An operation requiring unit content received unnormalized input.
class NotNormalized : public Error {
public:
    using Error::Error;
};

/// Root search exceeded its branch depth limit.
class DepthExceeded : public Error {
public:
    using Error::Error;
};

/// An enumeration-based certifier ran out of budget before deciding.
class Inconclusive : public Error {
public:
    using Error::Error;
};

/// Specialization collapsed the template's leading coefficient.
class DegenerateSpecialization : public Error {
public:
    using Error::Error;
};

/// Subfield embedding could not be completed or certified.
class EmbeddingFailed : public Error {
public:
    using Error::Error;
};

/// Global reconstruction requested for digits outside the prime field.
class UnsupportedReconstruction : public Error {
public:
    using Error::Error;
};

} // namespace gsm

#endif
