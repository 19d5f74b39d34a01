#pragma once

#include <stdexcept>
#include <string>

namespace tfcycle {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated operation precondition (bad argument, out-of-range input).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// The requested cycle cannot be closed (over-extraction, sub-ambient
// nozzle feed, no possible heat addition). Carries the failing station.
class InfeasibleCycleError : public Error {
public:
    InfeasibleCycleError(const std::string& what, int station_id)
        : Error(what), station(station_id) {}
    int station;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace tfcycle
