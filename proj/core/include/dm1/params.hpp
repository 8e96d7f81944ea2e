#pragma once

#include <dm1/errors.hpp>

namespace dm1 {

/// Parameters of a single-server queue with constant interarrival times and
/// exponential service. The interarrival constant a and the traffic
/// intensity rho are derived, never stored independently of lambda and mu.
struct QueueParams {
    double lambda = 0.0;  // arrival rate, clients per unit time
    double mu = 0.0;      // service rate, clients per unit time
    double a = 0.0;       // interarrival constant, = 1/lambda
    double rho = 0.0;     // traffic intensity, = lambda/mu

    static QueueParams from_rates(double lambda, double mu);
    static QueueParams from_interarrival(double a, double mu);

    bool stable() const { return rho < 1.0; }

    // Equilibrium formulas are meaningless at rho >= 1.
    void require_stable(const char* op) const;
};

}  // namespace dm1
