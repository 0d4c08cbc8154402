#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>

namespace wedge {

using Vec2 = std::array<double, 2>;
using Mat2 = std::array<std::array<double, 2>, 2>;  // row-major

/// Thrown when an input violates a documented precondition.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Planar sector {(r cos t, r sin t) : r > 0, 0 < t < theta0} with its two
/// boundary rays and their tangent/outer-normal frames.
///
/// Ray 1 is the positive x1-axis parameterized by arc length s > 0 against
/// tau1 = (-1,0); ray 2 is s*tau2 with tau2 = (cos theta0, sin theta0).
/// Both frames (tau_j, nu_j) are orthonormal and positively oriented.
struct WedgeDomain {
    double theta0;
    Vec2 tau1, nu1, tau2, nu2;

    /// Point on ray j at arc length s > 0.
    Vec2 ray_point(int ray, double s) const {
        if (ray == 1) return {s, 0.0};
        return {s * tau2[0], s * tau2[1]};
    }
    Vec2 tau(int ray) const { return ray == 1 ? tau1 : tau2; }
    Vec2 nu(int ray) const { return ray == 1 ? nu1 : nu2; }
};

/// Build the wedge with opening angle theta0.
///
/// In strict mode (default) the angle must lie in (0, pi), the range required
/// by the solver pipeline; relaxed mode admits (0, 2 pi) for geometry-only
/// work such as dilation scaling checks.
WedgeDomain make_wedge(double theta0, bool relaxed = false);

/// Layer-to-wedge map psi(x, theta) = (e^x cos theta, e^x sin theta).
Vec2 layer_map(double x, double theta);

/// Inverse of layer_map. Throws on the corner point (0,0).
std::array<double, 2> layer_map_inverse(Vec2 p);

/// Diffeomorphism onto the quarter plane: in polar coordinates
/// (r, t) |-> (r, kappa * t) with kappa = pi / (2 theta0). Throws at origin.
Vec2 quarter_plane_map(const WedgeDomain& w, Vec2 p);

/// Analytic Jacobian of quarter_plane_map; det is pi/(2 theta0) everywhere.
Mat2 quarter_plane_jacobian(const WedgeDomain& w, Vec2 p);

/// Corner traces of a boundary function.
struct CornerValues {
    double trace1 = 0.0;            ///< limit along ray 1
    double trace2 = 0.0;            ///< limit along ray 2
    double jump = 0.0;              ///< trace2 - trace1
    std::optional<double> unique_trace;  ///< set iff |jump| <= tolerance
};

/// Estimate the limit of f(s) as s -> 0+ from samples f(s0 * 2^-k), k=0..6,
/// by Richardson extrapolation. Throws domain_error if the extrapolation
/// tableau does not settle (oscillatory tail).
double corner_limit(const std::function<double(double)>& f, double s0 = 0.5,
                    int levels = 6, double settle_tol = 1e-6);

/// Corner limit from samples on a geometric grid s_i = s_first * q^i
/// (ascending). Uses a node stride approximating ratio 2.
double corner_limit_samples(std::span<const double> values, double s_first,
                            double q, int levels = 6,
                            double settle_tol = 1e-6);

/// Corner traces of per-ray boundary samplers. |jump| <= tol fills unique_trace.
CornerValues corner_values(const std::function<double(double)>& on_ray1,
                           const std::function<double(double)>& on_ray2,
                           double tol = 1e-8, double s0 = 0.5);

}  // namespace wedge
