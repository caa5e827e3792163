#pragma once

#include <stdexcept>
#include <string>

namespace jmrep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GenusMismatch : public Error {
public:
    explicit GenusMismatch(const std::string& where)
        : Error("genus mismatch in " + where) {}
};

/// Dimension, index or letter outside the range allowed by the genus.
class OutOfRange : public Error {
public:
    using Error::Error;
};

class NotSymplectic : public Error {
public:
    using Error::Error;
};

/// A homomorphism H -> 1/2 wedge^2 H that is not in the image of 1/2 wedge^3 H.
class NotInWedge3 : public Error {
public:
    using Error::Error;
};

/// Word substitution exceeded the configured length guard.
class WordTooLong : public Error {
public:
    using Error::Error;
};

class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

/// Malformed JSON document or schema violation.
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace jmrep
