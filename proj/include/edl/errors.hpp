#pragma once

#include <stdexcept>
#include <string>

namespace edl {

struct VacuumError : std::runtime_error {
    explicit VacuumError(const std::string& what) : std::runtime_error(what) {}
};

struct AmplitudeError : std::runtime_error {
    explicit AmplitudeError(const std::string& what) : std::runtime_error(what) {}
};

struct CFLCollapse : std::runtime_error {
    double t;
    explicit CFLCollapse(double t_, const std::string& what) : std::runtime_error(what), t(t_) {}
};

struct HorizonExceeded : std::runtime_error {
    explicit HorizonExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct OrderCapExceeded : std::runtime_error {
    explicit OrderCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientHistory : std::runtime_error {
    explicit InsufficientHistory(const std::string& what) : std::runtime_error(what) {}
};

struct UnsortedSeries : std::runtime_error {
    explicit UnsortedSeries(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace edl
