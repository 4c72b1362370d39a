#pragma once

#include <stdexcept>
#include <string>

namespace cnum {

// Domain error hierarchy. Every module throws one of these; the CLI maps
// them onto sysexits-style codes (domain -> 2, usage -> 64, io -> 74).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

struct NotSquarefree : Error {
    explicit NotSquarefree(const std::string& msg) : Error(msg) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& msg) : Error(msg) {}
};

struct WrongResidueClass : Error {
    explicit WrongResidueClass(const std::string& msg) : Error(msg) {}
};

struct TooManyPrimes : Error {
    explicit TooManyPrimes(const std::string& msg) : Error(msg) {}
};

struct InvalidDiscriminant : Error {
    explicit InvalidDiscriminant(const std::string& msg) : Error(msg) {}
};

struct DiscriminantMismatch : Error {
    explicit DiscriminantMismatch(const std::string& msg) : Error(msg) {}
};

struct DiscriminantTooLarge : Error {
    explicit DiscriminantTooLarge(const std::string& msg) : Error(msg) {}
};

struct SignMismatch : Error {
    explicit SignMismatch(const std::string& msg) : Error(msg) {}
};

struct SingularInput : Error {
    explicit SingularInput(const std::string& msg) : Error(msg) {}
};

struct OutOfSupportedRange : Error {
    explicit OutOfSupportedRange(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace cnum
