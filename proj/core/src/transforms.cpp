#include "wedge/transforms.hpp"

#include <cmath>

namespace wedge {

double beta_exponent(double p, double gamma) {
    if (!(p > 1.0)) throw domain_error("beta_exponent: need p in (1, inf)");
    return 3.0 - (2.0 + gamma) / p;
}

ExponentConfig ExponentConfig::make(double p, double gamma) {
    ExponentConfig c;
    c.p = p;
    c.gamma = gamma;
    c.beta = beta_exponent(p, gamma);
    return c;
}

namespace {

double weight(double x, double beta, PullVariant variant) {
    const double e = (variant == PullVariant::plain) ? -beta : 2.0 - beta;
    return std::exp(e * x);
}

}  // namespace

LayerField pull_to_layer(const WedgeField& f, const ExponentConfig& cfg,
                         PullVariant variant) {
    LayerField out(f.grid, f.components);
    const Grid& g = f.grid;
    for (int i = 0; i < g.nx; ++i) {
        const double w = weight(g.x(i), cfg.beta, variant);
        for (int m = 0; m < g.nth; ++m) {
            for (int c = 0; c < f.components; ++c) {
                out.at(i, m, c) = w * f.at(i, m, c);
            }
        }
    }
    return out;
}

WedgeField push_to_wedge(const LayerField& f, const ExponentConfig& cfg,
                         PullVariant variant) {
    WedgeField out(f.grid, f.components);
    const Grid& g = f.grid;
    for (int i = 0; i < g.nx; ++i) {
        const double w = 1.0 / weight(g.x(i), cfg.beta, variant);
        for (int m = 0; m < g.nth; ++m) {
            for (int c = 0; c < f.components; ++c) {
                out.at(i, m, c) = w * f.at(i, m, c);
            }
        }
    }
    return out;
}

}  // namespace wedge
