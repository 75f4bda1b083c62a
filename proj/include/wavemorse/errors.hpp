#ifndef WAVEMORSE_ERRORS_HPP
#define WAVEMORSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wavemorse {

/// Grid or truncation too coarse for the requested computation.
class resolution_error : public std::runtime_error {
public:
    explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};

/// Newton iteration failed to converge within the iteration budget.
class divergence_error : public std::runtime_error {
public:
    divergence_error(const std::string& what, double last_residual)
        : std::runtime_error(what), last_residual(last_residual) {}
    double last_residual;
};

/// The iterate left the admissible region min λ(v) > 0.
class singular_wave_error : public std::runtime_error {
public:
    explicit singular_wave_error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad experiment configuration (maps to CLI exit code 2).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wavemorse

#endif
