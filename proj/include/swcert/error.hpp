#pragma once

#include <stdexcept>

namespace swcert {

// Base class for all toolkit errors. The CLI maps any of these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// curve construction
class NotStrictlyConvex : public Error {
public:
    using Error::Error;
};

class InvalidCurve : public Error {
public:
    using Error::Error;
};

// limacon
class NoInnerLoop : public Error {
public:
    using Error::Error;
};

// catenoid profile
class DivergentIntegral : public Error {
public:
    using Error::Error;
};

class UnreachableHeight : public Error {
public:
    using Error::Error;
};

// Weingarten class validation
class NotUmbilic : public Error {
public:
    using Error::Error;
};

class NotElliptic : public Error {
public:
    using Error::Error;
};

// certification
class NotCmcType : public Error {
public:
    using Error::Error;
};

class MissingHypothesis : public Error {
public:
    using Error::Error;
};

class UndefinedRadius : public Error {
public:
    using Error::Error;
};

}  // namespace swcert
