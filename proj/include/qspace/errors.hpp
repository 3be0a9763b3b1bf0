#pragma once

#include <stdexcept>
#include <string>

namespace qspace {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Series with vanishing constant term cannot be inverted.
class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& what = "series is not invertible (constant term is zero)")
        : Error(what) {}
};

/// Square root requires a positive constant term.
class NoRealSqrt : public Error {
public:
    explicit NoRealSqrt(const std::string& what = "series has no real square root (constant term <= 0)")
        : Error(what) {}
};

class NegativeFactorial : public Error {
public:
    explicit NegativeFactorial(const std::string& what = "quantum factorial of a negative integer")
        : Error(what) {}
};

/// Highest-weight extraction found a kernel of unexpected dimension.
class DegenerateKernel : public Error {
public:
    explicit DegenerateKernel(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class MissingBlockFactor : public Error {
public:
    explicit MissingBlockFactor(const std::string& what) : Error(what) {}
};

/// A product would create a component above the configured degree cap.
class DegreeCapExceeded : public Error {
public:
    explicit DegreeCapExceeded(const std::string& what) : Error(what) {}
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

} // namespace qspace
