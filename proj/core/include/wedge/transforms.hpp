#pragma once

#include <vector>

#include "wedge/grid.hpp"

namespace wedge {

/// Weight exponent of the layer pull-back for integrability p and
/// Kondrat'ev weight gamma: beta_p = 3 - (2+gamma)/p.
double beta_exponent(double p, double gamma = 0.0);

/// Integrability/weight configuration shared by the weighted transforms and
/// the spectral solver.
struct ExponentConfig {
    double p = 4.0;
    double gamma = 0.0;
    double beta = 0.0;  ///< always 3 - (2+gamma)/p

    static ExponentConfig make(double p, double gamma = 0.0);
};

enum class PullVariant {
    plain,  ///< e^{-beta x} (f o psi)
    tilde   ///< e^{(2-beta) x} (f o psi)
};

/// Weighted pull-back of wedge samples to the layer. Node-exact (the grids
/// are identified through psi).
LayerField pull_to_layer(const WedgeField& f, const ExponentConfig& cfg,
                         PullVariant variant = PullVariant::plain);

/// Exact nodal inverse of pull_to_layer.
WedgeField push_to_wedge(const LayerField& f, const ExponentConfig& cfg,
                         PullVariant variant = PullVariant::plain);

}  // namespace wedge
