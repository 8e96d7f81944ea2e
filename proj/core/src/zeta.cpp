#include <dm1/zeta.hpp>

#include <cmath>

#include <dm1/special.hpp>

namespace dm1 {

double zeta(double s, const QueueParams& params) {
    params.require_stable("zeta");
    if (s < 0.0) throw std::domain_error("zeta: requires s >= 0");
    const double am = params.a * params.mu;
    const double arg = -am * std::exp(-am - params.a * s);
    return -lambert(Branch::principal, arg) / am;
}

double zeta0(const QueueParams& params) { return zeta(0.0, params); }

double zeta0_prime_s(const QueueParams& params) {
    params.require_stable("zeta0_prime_s");
    const double z0 = zeta0(params);
    return -params.a * z0 / (1.0 - params.a * params.mu * z0);
}

RootData root_data(const QueueParams& params) {
    RootData r;
    r.zeta0 = zeta0(params);
    r.zeta0_prime_s = -params.a * r.zeta0 / (1.0 - params.a * params.mu * r.zeta0);
    return r;
}

double mu_zeta0_deriv_a(const QueueParams& params) {
    params.require_stable("mu_zeta0_deriv_a");
    const double z0 = zeta0(params);
    const double mu = params.mu;
    return -mu * mu * z0 * (1.0 - z0) / (1.0 - params.a * mu * z0);
}

}  // namespace dm1
