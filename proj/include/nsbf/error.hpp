#pragma once

#include <stdexcept>
#include <string>

namespace nsbf {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidMesh : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class RangeError : public Error { using Error::Error; };
class ConvergenceError : public Error { using Error::Error; };
class NonVanishingError : public Error { using Error::Error; };
class NumericalBreakdown : public Error { using Error::Error; };
class InsufficientData : public Error { using Error::Error; };
class ConfigError : public Error { using Error::Error; };

}  // namespace nsbf
