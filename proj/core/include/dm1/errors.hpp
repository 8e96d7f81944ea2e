#pragma once

#include <stdexcept>
#include <string>

namespace dm1 {

// Thrown when an equilibrium quantity is requested at rho >= 1.
class stability_error : public std::domain_error {
public:
    explicit stability_error(const std::string& what) : std::domain_error(what) {}
};

// An iteration or adaptive scheme failed to reach its tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// A multiserver denominator n(1-zeta0)-j is numerically zero.
class resonance_error : public std::domain_error {
public:
    explicit resonance_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace dm1
