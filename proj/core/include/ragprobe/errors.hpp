#pragma once

#include <stdexcept>
#include <string>

namespace ragprobe {

// Invalid inputs (dimension mismatches, empty text, bad arguments) are
// reported with std::invalid_argument. The types below cover the remaining
// failure classes the CLI maps to distinct exit codes.

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class BackendError : public std::runtime_error {
public:
    explicit BackendError(const std::string& what) : std::runtime_error(what) {}
};

// A generator produced zero usable candidates within its budget.
class GenerationFailure : public BackendError {
public:
    explicit GenerationFailure(const std::string& what) : BackendError(what) {}
};

// Anchor database construction kept zero concepts after the full budget.
class InitializationFailure : public std::runtime_error {
public:
    explicit InitializationFailure(const std::string& what) : std::runtime_error(what) {}
};

class EmptyCorpusError : public std::runtime_error {
public:
    explicit EmptyCorpusError(const std::string& what) : std::runtime_error(what) {}
};

// Persisted artifacts disagree with their manifest or stored report.
class IntegrityError : public std::runtime_error {
public:
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ragprobe
