#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "wedge/geometry.hpp"

namespace wedge {

/// Shared discretization of the layer (-L,L) x (0,theta0) and, through the
/// map psi, of the annulus-truncated wedge e^-L <= rho <= e^L.
///
/// x_i = -L + i*hx (i = 0..nx-1, hx = 2L/nx, periodic wrap for transforms);
/// theta_m = (m+1/2)*theta0/nth (midpoint grid, exact for DCT-II/DST-II).
struct Grid {
    double theta0 = M_PI / 2;
    double L = 6.0;
    int nx = 128;
    int nth = 32;

    double hx() const { return 2.0 * L / nx; }
    double hth() const { return theta0 / nth; }
    double x(int i) const { return -L + hx() * i; }
    double theta(int m) const { return (m + 0.5) * hth(); }
    double r(int i) const { return std::exp(x(i)); }
    std::size_t nodes() const { return static_cast<std::size_t>(nx) * nth; }

    bool operator==(const Grid&) const = default;
};

/// Scalar or 2-vector samples over the wedge grid, row-major [i][m][c].
/// Vector values are Cartesian components; solvers convert to scaled polar
/// components internally.
struct WedgeField {
    Grid grid;
    int components = 1;
    std::vector<double> values;

    WedgeField() = default;
    WedgeField(const Grid& g, int comps = 1)
        : grid(g), components(comps), values(g.nodes() * comps, 0.0) {}

    double& at(int i, int m, int c = 0) {
        return values[(static_cast<std::size_t>(i) * grid.nth + m) * components + c];
    }
    double at(int i, int m, int c = 0) const {
        return values[(static_cast<std::size_t>(i) * grid.nth + m) * components + c];
    }
};

/// Samples over the layer grid; node-identified with WedgeField through psi.
struct LayerField {
    Grid grid;
    int components = 1;
    std::vector<double> values;

    LayerField() = default;
    LayerField(const Grid& g, int comps = 1)
        : grid(g), components(comps), values(g.nodes() * comps, 0.0) {}

    double& at(int i, int m, int c = 0) {
        return values[(static_cast<std::size_t>(i) * grid.nth + m) * components + c];
    }
    double at(int i, int m, int c = 0) const {
        return values[(static_cast<std::size_t>(i) * grid.nth + m) * components + c];
    }
};

/// Area quadrature weight r dr dtheta at node (i, m): e^{2 x_i} hx hth.
inline double area_weight(const Grid& g, int i) {
    return std::exp(2.0 * g.x(i)) * g.hx() * g.hth();
}

/// Read/write the JSON field format
/// {"theta0":..., "L":..., "nx":..., "ntheta":..., "components":1|2,
///  "values":[row-major floats]}.
WedgeField read_field(const std::string& path);
void write_field(const WedgeField& f, const std::string& path);

}  // namespace wedge
