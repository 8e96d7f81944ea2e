#include <dm1/special.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace dm1 {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kBranchPoint = -0.36787944117144232160;  // -1/e

// Series around the branch point x = -1/e in p = sqrt(2(e*x+1)).
// Principal branch takes +p, secondary -p.
double branch_point_series(double p) {
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
}

double halley(double x, double w) {
    for (int it = 0; it < 50; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double wp1 = w + 1.0;
        const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        const double dw = f / denom;
        w -= dw;
        if (std::abs(dw) <= 1e-15 * (1.0 + std::abs(w))) return w;
    }
    throw convergence_error("lambert: Halley iteration did not converge");
}

double lambert_principal(double x) {
    if (x < kBranchPoint) {
        if (x > kBranchPoint - 1e-14) return -1.0;
        throw std::domain_error("lambert(principal): requires x >= -1/e");
    }
    if (x == 0.0) return 0.0;

    const double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
    if (p < 1e-4) return branch_point_series(p);

    double w0;
    if (x < -0.25)
        w0 = branch_point_series(p);
    else if (x < 3.0)
        w0 = std::log1p(x > -0.99 ? x : -0.99);
    else
        w0 = std::log(x) - std::log(std::log(x));
    return halley(x, w0);
}

// For x in (-0.1, 0) solve the log form w + ln(-w) = ln(-x) by Newton;
// well conditioned even when exp(w) underflows.
double secondary_log_newton(double x) {
    const double target = std::log(-x);
    const double l1 = target;
    const double l2 = std::log(-l1);
    double w = l1 - l2 + l2 / l1;
    for (int it = 0; it < 50; ++it) {
        const double f = w + std::log(-w) - target;
        const double dw = f / (1.0 + 1.0 / w);
        w -= dw;
        if (std::abs(dw) <= 1e-15 * (1.0 + std::abs(w))) return w;
    }
    throw convergence_error("lambert: Newton iteration did not converge");
}

double lambert_secondary(double x) {
    if (!(x < 0.0))
        throw std::domain_error("lambert(secondary): requires -1/e <= x < 0");
    if (x < kBranchPoint) {
        if (x > kBranchPoint - 1e-14) return -1.0;
        throw std::domain_error("lambert(secondary): requires x >= -1/e");
    }

    const double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
    if (p < 1e-4) return branch_point_series(-p);

    if (x > -0.1) return secondary_log_newton(x);

    double w0;
    if (x < -0.27)
        w0 = branch_point_series(-p);
    else
        w0 = std::log(-x) - std::log(-std::log(-x));
    return halley(x, w0);
}

}  // namespace

double lambert(Branch branch, double x) {
    return branch == Branch::principal ? lambert_principal(x)
                                       : lambert_secondary(x);
}

double exp_integral(double x) {
    if (!(x > 0.0)) throw std::domain_error("exp_integral: requires x > 0");

    if (x < 1.0) {
        // power series: E(x) = -gamma - ln x - sum_k (-x)^k / (k * k!)
        double sum = 0.0;
        double term = 1.0;
        for (int k = 1; k <= 60; ++k) {
            term *= -x / k;
            const double add = term / k;
            sum += add;
            if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
        }
        return -kEulerGamma - std::log(x) - sum;
    }

    // modified Lentz continued fraction, E(x) = e^{-x} / (x+1 - 1/(x+3 - 4/(...)))
    const double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 300; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        d = 1.0 / d;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) <= 5e-16) return h * std::exp(-x);
    }
    throw convergence_error("exp_integral: continued fraction did not converge");
}

double TailEnvelope::remainder_beyond(double x, double shift) const {
    const double r = rate + shift;
    if (amplitude <= 0.0) return 0.0;
    if (!(r > 0.0)) return std::numeric_limits<double>::infinity();
    return amplitude * std::exp(-r * std::max(x, from_x)) / r;
}

double TailEnvelope::cutoff(double bound, double shift) const {
    const double r = rate + shift;
    if (amplitude <= 0.0) return from_x;
    if (!(r > 0.0) || !(bound > 0.0))
        throw std::domain_error("TailEnvelope::cutoff: needs positive rate and bound");
    const double x = std::log(amplitude / (bound * r)) / r;
    return std::max(from_x, x);
}

namespace {

// 15-point Kronrod nodes/weights on [-1,1] plus the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo, hi, value, error;
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double fsum = f(c - dx) + f(c + dx);
        resk += kWgk[i] * fsum;
        if (i % 2 == 1) resg += kWg[i / 2] * fsum;
    }
    Panel p;
    p.lo = lo;
    p.hi = hi;
    p.value = resk * h;
    p.error = std::abs((resk - resg) * h);
    return p;
}

double adaptive(const std::function<double(double)>& f, double lo, double hi,
                double abs_tol) {
    std::vector<Panel> stack{gk15(f, lo, hi)};
    double total = 0.0;
    std::size_t splits = 0;
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        const double local_tol = abs_tol * (p.hi - p.lo) / (hi - lo);
        if (p.error <= std::max(local_tol, 1e-300) ||
            p.hi - p.lo < 1e-14 * (hi - lo)) {
            total += p.value;
            continue;
        }
        if (++splits > 200000)
            throw convergence_error("integrate: panel limit exceeded");
        const double mid = 0.5 * (p.lo + p.hi);
        stack.push_back(gk15(f, p.lo, mid));
        stack.push_back(gk15(f, mid, p.hi));
    }
    return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol) {
    if (!(hi > lo)) return 0.0;
    return adaptive(f, lo, hi, abs_tol);
}

namespace detail {

double integrate_piecewise(const std::function<double(double)>& f, double s,
                           std::span<const double> breakpoints,
                           const TailEnvelope& tail, double abs_tol) {
    const double x_cut = tail.cutoff(abs_tol * 0.01, s);

    std::vector<double> edges;
    edges.push_back(0.0);
    for (double b : breakpoints)
        if (b > 0.0 && b < x_cut) edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // extend past the last kink in bounded steps so the exponential weight
    // cannot defeat a single huge panel
    double last = edges.back();
    const double step = std::max(1.0, edges.size() > 1 ? edges[1] - edges[0] : 1.0);
    while (last < x_cut) {
        last = std::min(last + 8.0 * step, x_cut);
        edges.push_back(last);
    }

    const auto weighted = [&](double x) {
        return (s == 0.0 ? 1.0 : std::exp(-s * x)) * f(x);
    };

    const double panel_tol = abs_tol * 0.5 / static_cast<double>(edges.size());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        total += integrate(weighted, edges[i], edges[i + 1], panel_tol);
    return total;
}

}  // namespace detail

double laplace_numeric(const std::function<double(double)>& f, double s,
                       std::span<const double> breakpoints,
                       const TailEnvelope& tail, double abs_tol) {
    if (!(s > 0.0)) throw std::domain_error("laplace_numeric: requires s > 0");
    return detail::integrate_piecewise(f, s, breakpoints, tail, abs_tol);
}

}  // namespace dm1
