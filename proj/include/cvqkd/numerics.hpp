#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace cvqkd {

// Gauss-Legendre rule on [-1, 1], nodes ascending. Cached per order.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int order);

// Quadrature nodes and weights for one axis.
struct AxisRule {
    std::vector<double> x;
    std::vector<double> w;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t size() const { return x.size(); }
};

// Composite Gauss-Legendre rule: `panels` equal panels on [lo, hi] with
// `nodes_per_panel` nodes each.
AxisRule composite_axis(double lo, double hi, int panels, int nodes_per_panel);

// Tensor-product integration domain [-half_width, half_width] per axis.
// `nodes` must be odd and >= 21 so the centre panel straddles 0; the
// effective count is rounded up to a whole number of 11-node panels.
struct IntegrationConfig {
    double half_width = 6.0;
    int nodes = 121;
    AxisRule axis() const;
};

// Composite-rule estimate of the d-dimensional integral (d = 1, 2 or 4).
// Throws NonFiniteSample if the integrand produces NaN or infinity.
double integrate(const std::function<double(std::span<const double>)>& fn,
                 const IntegrationConfig& config, int dim);

// Rectangular table of samples over strictly increasing axes.
struct Grid2D {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> values;  // row-major: values[i * ys.size() + j]

    double& at(std::size_t i, std::size_t j) { return values[i * ys.size() + j]; }
    double at(std::size_t i, std::size_t j) const { return values[i * ys.size() + j]; }
};

struct GridMax {
    double x = 0.0;
    double y = 0.0;
    double value = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
};

// Location and value of the maximal sample; ties go to the smallest (i, j)
// in row-major order.
GridMax argmax_on_grid(const Grid2D& grid);

// Bisection to |hi - lo| <= tol. Requires fn(lo) * fn(hi) <= 0, else
// throws NoSignChange.
double find_root(const std::function<double(double)>& fn, double lo, double hi,
                 double tol = 1e-6);

}  // namespace cvqkd
