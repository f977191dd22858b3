#pragma once

#include <stdexcept>
#include <string>

namespace aurora {

// Failure classes used across the library. The CLI maps these onto exit
// codes (see README).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class CapacityError : public Error {
public:
    using Error::Error;
};
class ShapeError : public Error {
public:
    using Error::Error;
};
class DomainError : public Error {
public:
    using Error::Error;
};
class GeometryError : public Error {
public:
    using Error::Error;
};
class PreconditionError : public Error {
public:
    using Error::Error;
};
class StepSizeError : public Error {
public:
    using Error::Error;
};
class SingularMassError : public Error {
public:
    using Error::Error;
};
class NumericalError : public Error {
public:
    using Error::Error;
};
class ResolutionError : public Error {
public:
    using Error::Error;
};
class ParameterError : public Error {
public:
    using Error::Error;
};
class PlanError : public Error {
public:
    using Error::Error;
};
class ConfigError : public Error {
public:
    using Error::Error;
};
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace aurora
