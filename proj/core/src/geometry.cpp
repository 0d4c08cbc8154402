#include "wedge/geometry.hpp"

#include <cmath>
#include <vector>

namespace wedge {

WedgeDomain make_wedge(double theta0, bool relaxed) {
    const double hi = relaxed ? 2.0 * M_PI : M_PI;
    if (!(theta0 > 0.0 && theta0 < hi)) {
        throw domain_error("opening angle must lie in (0, " +
                           std::string(relaxed ? "2*pi" : "pi") + ")");
    }
    WedgeDomain w;
    w.theta0 = theta0;
    w.tau1 = {-1.0, 0.0};
    w.nu1 = {0.0, -1.0};
    w.tau2 = {std::cos(theta0), std::sin(theta0)};
    w.nu2 = {-std::sin(theta0), std::cos(theta0)};
    return w;
}

Vec2 layer_map(double x, double theta) {
    const double r = std::exp(x);
    return {r * std::cos(theta), r * std::sin(theta)};
}

std::array<double, 2> layer_map_inverse(Vec2 p) {
    const double rho = std::hypot(p[0], p[1]);
    if (rho == 0.0) throw domain_error("layer_map_inverse: corner point is singular");
    return {std::log(rho), std::atan2(p[1], p[0])};
}

Vec2 quarter_plane_map(const WedgeDomain& w, Vec2 p) {
    const double rho = std::hypot(p[0], p[1]);
    if (rho == 0.0) throw domain_error("quarter_plane_map: corner point is singular");
    const double kappa = M_PI / (2.0 * w.theta0);
    const double t = std::acos(std::clamp(p[0] / rho, -1.0, 1.0));
    return {rho * std::cos(kappa * t), rho * std::sin(kappa * t)};
}

Mat2 quarter_plane_jacobian(const WedgeDomain& w, Vec2 p) {
    const double rho = std::hypot(p[0], p[1]);
    if (rho == 0.0) throw domain_error("quarter_plane_jacobian: corner point is singular");
    const double kappa = M_PI / (2.0 * w.theta0);
    const double t = std::acos(std::clamp(p[0] / rho, -1.0, 1.0));
    const double tt = kappa * t;
    const double c = std::cos(t), s = std::sin(t);
    const double C = std::cos(tt), S = std::sin(tt);
    // polar chain rule: d(rho)/dx = (c, s), d(theta)/dx = (-s, c)/rho
    // Phi = (rho cos(kappa theta), rho sin(kappa theta))
    Mat2 J;
    J[0][0] = C * c + kappa * S * s;
    J[0][1] = C * s - kappa * S * c;
    J[1][0] = S * c - kappa * C * s;
    J[1][1] = S * s + kappa * C * c;
    return J;
}

namespace {

double richardson(const std::vector<double>& samples, double ratio,
                  double settle_tol, bool* ok) {
    // samples[k] = f(s0 * ratio^-k); eliminate powers s^1, s^2, ... successively.
    std::vector<double> t = samples;
    const int n = static_cast<int>(t.size());
    double last_diff = std::abs(t[n - 1] - t[n - 2]);
    double best = t[n - 1];
    for (int j = 1; j < n; ++j) {
        const double w = std::pow(ratio, j);
        for (int k = 0; k < n - j; ++k) {
            t[k] = (w * t[k + 1] - t[k]) / (w - 1.0);
        }
        const double diff = std::abs(t[n - j - 1] - best);
        best = t[n - j - 1];
        if (j >= 2 && diff > 4.0 * last_diff && diff > settle_tol) {
            // tableau diverging
            *ok = false;
            return best;
        }
        last_diff = std::max(diff, 1e-300);
    }
    *ok = last_diff <= std::max(settle_tol, 1e-12 * std::abs(best));
    return best;
}

}  // namespace

double corner_limit(const std::function<double(double)>& f, double s0,
                    int levels, double settle_tol) {
    std::vector<double> samples(levels + 1);
    for (int k = 0; k <= levels; ++k) samples[k] = f(s0 * std::pow(0.5, k));
    bool ok = true;
    const double v = richardson(samples, 2.0, settle_tol, &ok);
    if (!ok) throw domain_error("corner_limit: extrapolation not convergent");
    return v;
}

double corner_limit_samples(std::span<const double> values, double s_first,
                            double q, int levels, double settle_tol) {
    if (q <= 1.0) throw domain_error("corner_limit_samples: need ascending geometric grid");
    const int stride = std::max(1, static_cast<int>(std::lround(std::log(2.0) / std::log(q))));
    const int need = stride * levels;
    if (static_cast<int>(values.size()) <= need) {
        throw domain_error("corner_limit_samples: not enough samples near the corner");
    }
    (void)s_first;
    // samples toward s -> 0: index k uses node (levels-k)*stride so that
    // sample spacing decreases by the exact grid ratio q^stride each level.
    std::vector<double> samples(levels + 1);
    for (int k = 0; k <= levels; ++k) {
        samples[k] = values[static_cast<size_t>((levels - k) * stride)];
    }
    bool ok = true;
    const double v = richardson(samples, std::pow(q, stride), settle_tol, &ok);
    if (!ok) throw domain_error("corner_limit_samples: extrapolation not convergent");
    return v;
}

CornerValues corner_values(const std::function<double(double)>& on_ray1,
                           const std::function<double(double)>& on_ray2,
                           double tol, double s0) {
    CornerValues cv;
    cv.trace1 = corner_limit(on_ray1, s0);
    cv.trace2 = corner_limit(on_ray2, s0);
    cv.jump = cv.trace2 - cv.trace1;
    if (std::abs(cv.jump) <= tol) {
        cv.unique_trace = 0.5 * (cv.trace1 + cv.trace2);
    }
    return cv;
}

}  // namespace wedge
