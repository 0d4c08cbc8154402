#include "wedge/operators.hpp"

#include <cmath>

#include "wedge/fft.hpp"

namespace wedge {

VectorField to_scaled_polar(const WedgeField& cart) {
    VectorField v(cart.grid);
    const Grid& g = cart.grid;
    for (int i = 0; i < g.nx; ++i) {
        const double r = g.r(i);
        for (int m = 0; m < g.nth; ++m) {
            const double c = std::cos(g.theta(m)), s = std::sin(g.theta(m));
            const double v1 = cart.at(i, m, 0), v2 = cart.at(i, m, 1);
            v.ca(i, m) = r * (v1 * c + v2 * s);
            v.cb(i, m) = r * (-v1 * s + v2 * c);
        }
    }
    return v;
}

WedgeField to_cartesian(const VectorField& v) {
    WedgeField cart(v.grid, 2);
    const Grid& g = v.grid;
    for (int i = 0; i < g.nx; ++i) {
        const double rinv = std::exp(-g.x(i));
        for (int m = 0; m < g.nth; ++m) {
            const double c = std::cos(g.theta(m)), s = std::sin(g.theta(m));
            const double vr = rinv * v.ca(i, m), vt = rinv * v.cb(i, m);
            cart.at(i, m, 0) = vr * c - vt * s;
            cart.at(i, m, 1) = vr * s + vt * c;
        }
    }
    return cart;
}

namespace {

// 4th-order first derivative of a single line of n samples with spacing h.
void d1_line(const double* u, double* d, int n, double h, int stride) {
    auto U = [&](int i) { return u[i * stride]; };
    const double inv12h = 1.0 / (12.0 * h);
    for (int i = 2; i < n - 2; ++i) {
        d[i * stride] = (U(i - 2) - 8 * U(i - 1) + 8 * U(i + 1) - U(i + 2)) * inv12h;
    }
    if (n >= 5) {
        for (int i : {0, 1}) {
            d[i * stride] = (-25 * U(i) + 48 * U(i + 1) - 36 * U(i + 2) +
                             16 * U(i + 3) - 3 * U(i + 4)) * inv12h;
        }
        for (int i : {n - 2, n - 1}) {
            d[i * stride] = (25 * U(i) - 48 * U(i - 1) + 36 * U(i - 2) -
                             16 * U(i - 3) + 3 * U(i - 4)) * inv12h;
        }
    } else {
        for (int i = 0; i < n; ++i) d[i * stride] = 0.0;
    }
}

}  // namespace

namespace ops {

WedgeField dx(const WedgeField& u) {
    WedgeField d(u.grid, u.components);
    const Grid& g = u.grid;
    for (int m = 0; m < g.nth; ++m) {
        for (int c = 0; c < u.components; ++c) {
            d1_line(u.values.data() + m * u.components + c,
                    d.values.data() + m * u.components + c, g.nx, g.hx(),
                    g.nth * u.components);
        }
    }
    return d;
}

WedgeField dth(const WedgeField& u) {
    WedgeField d(u.grid, u.components);
    const Grid& g = u.grid;
    for (int i = 0; i < g.nx; ++i) {
        for (int c = 0; c < u.components; ++c) {
            d1_line(u.values.data() + (static_cast<std::size_t>(i) * g.nth) * u.components + c,
                    d.values.data() + (static_cast<std::size_t>(i) * g.nth) * u.components + c,
                    g.nth, g.hth(), u.components);
        }
    }
    return d;
}

WedgeField dth_cos(const WedgeField& u) {
    const Grid& g = u.grid;
    WedgeField d(g, u.components);
    std::vector<double> row(g.nth), coef(g.nth), out(g.nth);
    for (int c = 0; c < u.components; ++c) {
        for (int i = 0; i < g.nx; ++i) {
            for (int m = 0; m < g.nth; ++m) row[m] = u.at(i, m, c);
            fft::dct2(row, coef);
            // d/dth cos(mu_k th) = -mu_k sin(mu_k th); cos mode k -> sin mode k
            std::vector<double> sser(g.nth, 0.0);
            for (int k = 1; k < g.nth; ++k) {
                const double mu = M_PI * k / g.theta0;
                sser[k - 1] = -mu * coef[k];  // DST slot k-1 holds sine mode k
            }
            fft::dst3(sser, out);
            for (int m = 0; m < g.nth; ++m) d.at(i, m, c) = out[m];
        }
    }
    return d;
}

WedgeField dth_sin(const WedgeField& u) {
    const Grid& g = u.grid;
    WedgeField d(g, u.components);
    std::vector<double> row(g.nth), coef(g.nth), out(g.nth);
    for (int c = 0; c < u.components; ++c) {
        for (int i = 0; i < g.nx; ++i) {
            for (int m = 0; m < g.nth; ++m) row[m] = u.at(i, m, c);
            fft::dst2(row, coef);
            // d/dth sin(mu_k th) = mu_k cos(mu_k th); sine mode k -> cos mode k
            // (the top sine mode k = nth aliases outside the cosine range and
            // is dropped)
            std::vector<double> cser(g.nth, 0.0);
            for (int k = 1; k < g.nth; ++k) {
                const double mu = M_PI * k / g.theta0;
                cser[k] = mu * coef[k - 1];
            }
            fft::dct3(cser, out);
            for (int m = 0; m < g.nth; ++m) d.at(i, m, c) = out[m];
        }
    }
    return d;
}

VectorField grad(const WedgeField& u, Theta td) {
    VectorField v(u.grid);
    WedgeField gx = dx(u);
    WedgeField gt = (td == Theta::fd4) ? dth(u) : dth_cos(u);
    v.a = std::move(gx.values);
    v.b = std::move(gt.values);
    return v;
}

VectorField grad_perp(const WedgeField& psi, Theta td) {
    VectorField v(psi.grid);
    WedgeField gt = (td == Theta::fd4) ? dth(psi) : dth_sin(psi);
    WedgeField gx = dx(psi);
    v.a.resize(gt.values.size());
    for (std::size_t k = 0; k < gt.values.size(); ++k) v.a[k] = -gt.values[k];
    v.b = std::move(gx.values);
    return v;
}

WedgeField div(const VectorField& v, Theta td) {
    const Grid& g = v.grid;
    WedgeField fa(g), fb(g);
    fa.values = v.a;
    fb.values = v.b;
    WedgeField da = dx(fa);
    WedgeField db = (td == Theta::fd4) ? dth(fb) : dth_sin(fb);
    WedgeField out(g);
    for (int i = 0; i < g.nx; ++i) {
        const double w = std::exp(-2.0 * g.x(i));
        for (int m = 0; m < g.nth; ++m) {
            out.at(i, m) = w * (da.at(i, m) + db.at(i, m));
        }
    }
    return out;
}

WedgeField curl(const VectorField& v, Theta td) {
    const Grid& g = v.grid;
    WedgeField fa(g), fb(g);
    fa.values = v.a;
    fb.values = v.b;
    WedgeField db = dx(fb);
    WedgeField da = (td == Theta::fd4) ? dth(fa) : dth_cos(fa);
    WedgeField out(g);
    for (int i = 0; i < g.nx; ++i) {
        const double w = std::exp(-2.0 * g.x(i));
        for (int m = 0; m < g.nth; ++m) {
            out.at(i, m) = w * (db.at(i, m) - da.at(i, m));
        }
    }
    return out;
}

WedgeField laplacian(const WedgeField& u, Theta td, bool sin_parity) {
    const Grid& g = u.grid;
    WedgeField dxx = dx(dx(u));
    WedgeField dtt(g, u.components);
    if (td == Theta::fd4) {
        dtt = dth(dth(u));
    } else {
        dtt = sin_parity ? dth_cos(dth_sin(u)) : dth_sin(dth_cos(u));
    }
    WedgeField out(g, u.components);
    for (int i = 0; i < g.nx; ++i) {
        const double w = std::exp(-2.0 * g.x(i));
        for (int m = 0; m < g.nth; ++m) {
            for (int c = 0; c < u.components; ++c) {
                out.at(i, m, c) = w * (dxx.at(i, m, c) + dtt.at(i, m, c));
            }
        }
    }
    return out;
}

VectorField vector_laplacian(const VectorField& v, Theta td) {
    // 2D identity: Lap v = grad(div v) + grad_perp(curl v).
    WedgeField d = div(v, td);
    WedgeField c = curl(v, td);
    VectorField gd = grad(d, td);
    VectorField gc = grad_perp(c, td);
    VectorField out(v.grid);
    for (std::size_t k = 0; k < out.a.size(); ++k) {
        out.a[k] = gd.a[k] + gc.a[k];
        out.b[k] = gd.b[k] + gc.b[k];
    }
    return out;
}

}  // namespace ops

namespace {

// 4-point Lagrange extrapolation to theta=0 from midpoints (0.5,1.5,2.5,3.5)h
constexpr double kVal[4] = {35.0 / 16, -35.0 / 16, 21.0 / 16, -5.0 / 16};
// one-sided derivative at theta=0 (units of 1/h)
constexpr double kDer[4] = {-71.0 / 24, 141.0 / 24, -93.0 / 24, 23.0 / 24};

}  // namespace

std::vector<double> boundary_value(const WedgeField& u, int ray) {
    const Grid& g = u.grid;
    std::vector<double> out(g.nx);
    for (int i = 0; i < g.nx; ++i) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) {
            const int m = (ray == 1) ? k : g.nth - 1 - k;
            s += kVal[k] * u.at(i, m);
        }
        out[i] = s;
    }
    return out;
}

std::vector<double> boundary_dtheta(const WedgeField& u, int ray) {
    const Grid& g = u.grid;
    std::vector<double> out(g.nx);
    const double sign = (ray == 1) ? 1.0 : -1.0;  // derivative toward increasing theta
    for (int i = 0; i < g.nx; ++i) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) {
            const int m = (ray == 1) ? k : g.nth - 1 - k;
            s += kDer[k] * u.at(i, m);
        }
        out[i] = sign * s / g.hth();
    }
    return out;
}

std::vector<double> boundary_value_cos(const WedgeField& u, int ray) {
    const Grid& g = u.grid;
    std::vector<double> out(g.nx), row(g.nth), coef(g.nth);
    for (int i = 0; i < g.nx; ++i) {
        for (int m = 0; m < g.nth; ++m) row[m] = u.at(i, m);
        fft::dct2(row, coef);
        double s = coef[0] / std::sqrt(g.theta0);
        const double scale = std::sqrt(2.0 / g.theta0);
        for (int k = 1; k < g.nth; ++k) {
            const double ek = (ray == 1) ? 1.0 : std::cos(M_PI * k);
            s += coef[k] * scale * ek;
        }
        out[i] = s;
    }
    return out;
}

std::vector<double> boundary_value_sin(const WedgeField& u, int ray) {
    (void)ray;
    return std::vector<double>(static_cast<std::size_t>(u.grid.nx), 0.0);
}

RayTrace boundary_trace(const VectorField& v, int ray, bool spectral) {
    const Grid& g = v.grid;
    WedgeField fa(g), fb(g);
    fa.values = v.a;
    fb.values = v.b;
    std::vector<double> a_tr, b_tr;
    if (spectral) {
        a_tr = boundary_value_cos(fa, ray);
        b_tr = boundary_value_sin(fb, ray);
    } else {
        a_tr = boundary_value(fa, ray);
        b_tr = boundary_value(fb, ray);
    }
    RayTrace t;
    t.normal.resize(g.nx);
    t.tangential.resize(g.nx);
    for (int i = 0; i < g.nx; ++i) {
        const double rinv = std::exp(-g.x(i));
        // e_r(0)=+tau-direction bookkeeping: on ray 1, nu1=-e_theta(0),
        // tau1=-e_r(0); on ray 2, nu2=+e_theta(theta0), tau2=+e_r(theta0).
        if (ray == 1) {
            t.normal[i] = -rinv * b_tr[i];
            t.tangential[i] = -rinv * a_tr[i];
        } else {
            t.normal[i] = rinv * b_tr[i];
            t.tangential[i] = rinv * a_tr[i];
        }
    }
    return t;
}

std::vector<double> ray_derivative(const Grid& g, std::vector<double> samples) {
    std::vector<double> d(samples.size());
    d1_line(samples.data(), d.data(), static_cast<int>(samples.size()), g.hx(), 1);
    for (int i = 0; i < static_cast<int>(d.size()); ++i) d[i] *= std::exp(-g.x(i));
    return d;
}

std::vector<double> tangential_derivative(const Grid& g, int ray,
                                          const std::vector<double>& samples) {
    std::vector<double> d = ray_derivative(g, samples);
    if (ray == 1) {
        for (double& v : d) v = -v;
    }
    return d;
}

}  // namespace wedge
