#pragma once

#include <string>
#include <vector>

#include "wedge/grid.hpp"

namespace wedge {

/// Result of a discrete norm evaluation, tagged with the quadrature setup so
/// reported values are reproducible.
struct NormReport {
    double value = 0.0;
    std::string kind;
    double truncation_L = 0.0;
    int nx = 0, nth = 0;

    operator double() const { return value; }
};

/// Weighted Lebesgue norm (integral of |u|^p rho^gamma over the truncated
/// wedge, area measure r dr dtheta)^{1/p}. Vector fields use the Euclidean
/// pointwise magnitude. Throws on NaN/Inf samples.
NormReport lp_gamma_norm(const WedgeField& u, double p, double gamma);

/// Kondrat'ev norm: ( sum_{|alpha| <= m} || rho^{|alpha|-m} d^alpha u ||_{L^p_gamma}^p )^{1/p}.
/// Cartesian derivatives are formed through the layer chain rule with
/// 4th-order differences; m in {0..3}.
NormReport kondratev_norm(const WedgeField& u, int m, double p, double gamma);

/// Homogeneous Sobolev seminorm: sum_{|alpha| = k} || d^alpha u ||_{L^p}.
NormReport homogeneous_seminorm(const WedgeField& u, int k, double p);

/// 1D Sobolev-Slobodeckij seminorm of uniform samples on a segment of
/// length `length`: double-sum quadrature of the Gagliardo kernel
/// |f(x)-f(y)|^p / |x-y|^{1+sp}, diagonal cells replaced by the analytic
/// leading-order correction. Requires s in (0,1).
NormReport slobodeckij_seminorm(const std::vector<double>& samples,
                                double length, double s, double p);

/// Cartesian derivative fields through the layer chain rule:
/// d1 = e^{-x}(cos Dx - sin Dth), d2 = e^{-x}(sin Dx + cos Dth), FD4 ops.
WedgeField cartesian_dx1(const WedgeField& u);
WedgeField cartesian_dx2(const WedgeField& u);

}  // namespace wedge
