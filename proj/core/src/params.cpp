#include <dm1/params.hpp>

#include <cmath>
#include <string>

namespace dm1 {

namespace {
void check_rates(double lambda, double mu) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("QueueParams: lambda must be positive and finite");
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw std::invalid_argument("QueueParams: mu must be positive and finite");
}
}  // namespace

QueueParams QueueParams::from_rates(double lambda, double mu) {
    check_rates(lambda, mu);
    QueueParams p;
    p.lambda = lambda;
    p.mu = mu;
    p.a = 1.0 / lambda;
    p.rho = lambda / mu;
    return p;
}

QueueParams QueueParams::from_interarrival(double a, double mu) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("QueueParams: a must be positive and finite");
    QueueParams p = from_rates(1.0 / a, mu);
    p.a = a;  // keep the caller's value exactly; lambda = 1/a
    return p;
}

void QueueParams::require_stable(const char* op) const {
    if (!stable())
        throw stability_error(std::string(op) + ": requires rho < 1 (rho = " +
                              std::to_string(rho) + ")");
}

}  // namespace dm1
