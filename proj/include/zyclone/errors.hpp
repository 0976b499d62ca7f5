#pragma once

#include <stdexcept>
#include <string>

namespace zyclone {

// Base class for all input-validation failures raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRangeVertex : Error {
    explicit OutOfRangeVertex(const std::string& what) : Error(what) {}
};

struct WrongEdgeSize : Error {
    explicit WrongEdgeSize(const std::string& what) : Error(what) {}
};

struct UniformityTooSmall : Error {
    explicit UniformityTooSmall(const std::string& what) : Error(what) {}
};

struct WrongSetSize : Error {
    explicit WrongSetSize(const std::string& what) : Error(what) {}
};

struct LengthTooSmall : Error {
    explicit LengthTooSmall(const std::string& what) : Error(what) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& what) : Error(what) {}
};

struct DivisibilityViolated : Error {
    explicit DivisibilityViolated(const std::string& what) : Error(what) {}
};

struct PrimeTooSmall : Error {
    explicit PrimeTooSmall(const std::string& what) : Error(what) {}
};

struct ZeroResidue : Error {
    explicit ZeroResidue(const std::string& what) : Error(what) {}
};

struct UniformityMismatch : Error {
    explicit UniformityMismatch(const std::string& what) : Error(what) {}
};

struct InstanceTooLarge : Error {
    explicit InstanceTooLarge(const std::string& what) : Error(what) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace zyclone
