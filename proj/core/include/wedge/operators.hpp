#pragma once

#include <vector>

#include "wedge/grid.hpp"

namespace wedge {

/// Vector field on the wedge grid stored in scaled polar components
/// a = r * v_r, b = r * v_theta. In this representation
///   div v  = e^{-2x} (Dx a + Dth b),
///   curl v = e^{-2x} (Dx b - Dth a),
///   grad u = (Dx u, Dth u),  grad_perp s = (-Dth s, Dx s),
/// so the identities curl(grad) = 0 and div(grad_perp) = 0 hold exactly for
/// any pair of commuting 1D difference operators (Dx, Dth).
struct VectorField {
    Grid grid;
    std::vector<double> a, b;

    VectorField() = default;
    explicit VectorField(const Grid& g)
        : grid(g), a(g.nodes(), 0.0), b(g.nodes(), 0.0) {}

    double& ca(int i, int m) { return a[static_cast<std::size_t>(i) * grid.nth + m]; }
    double ca(int i, int m) const { return a[static_cast<std::size_t>(i) * grid.nth + m]; }
    double& cb(int i, int m) { return b[static_cast<std::size_t>(i) * grid.nth + m]; }
    double cb(int i, int m) const { return b[static_cast<std::size_t>(i) * grid.nth + m]; }
};

/// Cartesian <-> scaled-polar conversion (pointwise, exact).
VectorField to_scaled_polar(const WedgeField& cart);
WedgeField to_cartesian(const VectorField& v);

namespace ops {

/// 4th-order finite differences, one-sided at the edges. These act along a
/// single grid axis, so any Dx composed with any Dth commutes exactly.
WedgeField dx(const WedgeField& u);
WedgeField dth(const WedgeField& u);

/// Spectral theta derivatives for parity-tagged fields (exact on fields in
/// the matching cosine/sine basis).
WedgeField dth_cos(const WedgeField& u);  ///< cos-parity in, sin-parity out
WedgeField dth_sin(const WedgeField& u);  ///< sin-parity in, cos-parity out

enum class Theta { fd4, spectral };

/// grad u with x-derivative FD4; theta-derivative per `td` where cos-parity
/// input is assumed when spectral.
VectorField grad(const WedgeField& u, Theta td = Theta::fd4);
/// grad_perp psi = (-Dth psi, Dx psi); spectral assumes sin-parity psi.
VectorField grad_perp(const WedgeField& psi, Theta td = Theta::fd4);
/// div with spectral variant assuming (a cos-parity, b sin-parity).
WedgeField div(const VectorField& v, Theta td = Theta::fd4);
WedgeField curl(const VectorField& v, Theta td = Theta::fd4);
/// Scalar Laplacian e^{-2x}(Dx^2 + Dth^2); spectral assumes given parity.
WedgeField laplacian(const WedgeField& u, Theta td = Theta::fd4,
                     bool sin_parity = false);
/// Vector Laplacian grad(div v) + grad_perp(curl v).
VectorField vector_laplacian(const VectorField& v, Theta td = Theta::fd4);

}  // namespace ops

/// Boundary trace of a scalar at theta=0 (ray 1) or theta=theta0 (ray 2),
/// per x-node, by 4-point one-sided Lagrange extrapolation from the midpoint
/// grid.
std::vector<double> boundary_value(const WedgeField& u, int ray);
/// One-sided d/dtheta at the boundary.
std::vector<double> boundary_dtheta(const WedgeField& u, int ray);

/// Spectral boundary value for parity-tagged fields (exact zero for
/// sin-parity fields).
std::vector<double> boundary_value_cos(const WedgeField& u, int ray);
std::vector<double> boundary_value_sin(const WedgeField& u, int ray);

/// Physical boundary traces of a vector field: u.nu and u.tau sampled over
/// the arc-length grid s_i = e^{x_i} of the given ray.
struct RayTrace {
    std::vector<double> normal;      ///< u . nu
    std::vector<double> tangential;  ///< u . tau
};
RayTrace boundary_trace(const VectorField& v, int ray, bool spectral = false);

/// d/ds of samples on the arc-length grid s_i = e^{x_i} (FD4 in x, chain rule).
std::vector<double> ray_derivative(const Grid& g, std::vector<double> samples);

/// Tangential derivative d/d tau = (tau . e_r) d/ds of ray samples:
/// on ray 1, tau1 = -e_r so this is -d/ds; on ray 2 it is +d/ds.
std::vector<double> tangential_derivative(const Grid& g, int ray,
                                          const std::vector<double>& samples);

}  // namespace wedge
