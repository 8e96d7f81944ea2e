#pragma once

#include <dm1/params.hpp>

namespace dm1 {

/// The equilibrium root and its s-derivative at 0. zeta0 solves
/// z = exp(-a*mu*(1-z)) in (0,1); zeta0_prime_s = -a*zeta0/(1 - a*mu*zeta0).
struct RootData {
    double zeta0 = 0.0;
    double zeta0_prime_s = 0.0;  // d zeta / ds at s = 0, negative
};

/// Root of z = exp(-a*(mu + s - mu*z)) in (0,1), via the principal Lambert branch.
double zeta(double s, const QueueParams& params);

double zeta0(const QueueParams& params);
double zeta0_prime_s(const QueueParams& params);
RootData root_data(const QueueParams& params);

/// d(mu*zeta0)/da at fixed mu: -mu^2*zeta0*(1-zeta0)/(1 - a*mu*zeta0).
double mu_zeta0_deriv_a(const QueueParams& params);

}  // namespace dm1
