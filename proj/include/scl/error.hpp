#pragma once

#include <stdexcept>
#include <string>

namespace scl {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

/// Collinear / insufficient / zero-volume geometric input.
class DegenerateGeometry : public Error {
public:
    explicit DegenerateGeometry(const std::string& msg) : Error(msg) {}
};

/// Scene or placement generation could not make progress.
class GenerationFailure : public Error {
public:
    explicit GenerationFailure(const std::string& msg) : Error(msg) {}
};

class RegistrationFailure : public Error {
public:
    explicit RegistrationFailure(const std::string& msg) : Error(msg) {}
};

class CorrespondenceFailure : public Error {
public:
    explicit CorrespondenceFailure(const std::string& msg) : Error(msg) {}
};

/// Ground-truth support analysis rejected the input scene.
class OracleFailure : public Error {
public:
    explicit OracleFailure(const std::string& msg) : Error(msg) {}
};

/// Cyclic dependency graph where a DAG is required.
class CircularDependency : public Error {
public:
    explicit CircularDependency(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace scl
