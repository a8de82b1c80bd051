#pragma once

#include <stdexcept>
#include <string>

namespace hydrodyn {

// Raised when the closed-form velocity is requested inside the guard band
// around a zero of cos(omega0 t), where the 1/cos^2 form is singular.
class singular_time_error : public std::runtime_error {
public:
    explicit singular_time_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the velocity-squared product turns negative, i.e. the
// square root in the closed-form solution has no real value.
class negative_radicand_error : public std::runtime_error {
public:
    explicit negative_radicand_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the numeric integrator cannot reach its endpoint tolerance
// after the maximum number of step refinements.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hydrodyn
