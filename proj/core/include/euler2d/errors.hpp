#ifndef EULER2D_ERRORS_HPP
#define EULER2D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace euler2d {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Run configuration rejected before any allocation.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

// Validity-window violation (J_kappa outside [1/2,3/2], |grad eta - I| too
// large, metric collapse).  Terminal for a run, never silently continued.
struct WindowBreach : Error {
    explicit WindowBreach(const std::string& msg) : Error("window breach: " + msg) {}
};

struct SolverError : Error {
    explicit SolverError(const std::string& msg) : Error("solver: " + msg) {}
};

struct GeometryError : Error {
    explicit GeometryError(const std::string& msg) : Error("geometry: " + msg) {}
};

} // namespace euler2d

#endif
