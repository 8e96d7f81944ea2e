#pragma once

#include <functional>
#include <span>

#include <dm1/errors.hpp>

namespace dm1 {

/// The two real branches of the inverse of w -> w*exp(w).
/// principal: w >= -1, defined on [-1/e, inf).
/// secondary: w <= -1, defined on [-1/e, 0).
enum class Branch { principal, secondary };

/// Solves w*exp(w) = x on the requested branch (Halley iteration).
/// Relative residual of the returned w is below 1e-14.
double lambert(Branch branch, double x);

/// E(x) = integral_x^inf exp(-t)/t dt for x > 0.
double exp_integral(double x);

/// Certified decay bound f(x) <= amplitude * exp(-rate * x) for x >= from_x.
/// Used to cut quadrature tails with a computable remainder.
struct TailEnvelope {
    double amplitude = 0.0;
    double rate = 1.0;
    double from_x = 0.0;

    // Bound on integral_x^inf amplitude * exp(-(rate + shift) t) dt.
    double remainder_beyond(double x, double shift = 0.0) const;
    // Smallest x >= from_x with remainder_beyond(x, shift) <= bound.
    double cutoff(double bound, double shift = 0.0) const;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [lo, hi].
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol = 1e-10);

/// integral_0^inf exp(-s x) f(x) dx for s > 0. The integration is split at
/// the breakpoints (density kinks) and the tail beyond the envelope cutoff
/// is dropped, keeping the absolute error below abs_tol.
double laplace_numeric(const std::function<double(double)>& f, double s,
                       std::span<const double> breakpoints,
                       const TailEnvelope& tail, double abs_tol = 1e-8);

namespace detail {
// Shared by laplace_numeric (s > 0) and plain density integrals (s = 0).
double integrate_piecewise(const std::function<double(double)>& f, double s,
                           std::span<const double> breakpoints,
                           const TailEnvelope& tail, double abs_tol);
}  // namespace detail

}  // namespace dm1
