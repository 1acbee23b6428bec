#include "cvqkd/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "cvqkd/errors.hpp"

namespace cvqkd {

namespace {

GaussLegendreRule compute_gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi-style initial guess, refined by Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 1; k < n; ++k) {
                const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[n - 1 - i] = x;
        rule.nodes[i] = -x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
    if (order < 1) {
        throw DomainError("gauss_legendre: order must be positive");
    }
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, compute_gauss_legendre(order)).first;
    }
    return it->second;
}

AxisRule composite_axis(double lo, double hi, int panels, int nodes_per_panel) {
    if (!(hi > lo)) {
        throw DomainError("composite_axis: empty interval");
    }
    if (panels < 1 || nodes_per_panel < 1) {
        throw DomainError("composite_axis: counts must be positive");
    }
    const GaussLegendreRule& base = gauss_legendre(nodes_per_panel);
    AxisRule axis;
    axis.lo = lo;
    axis.hi = hi;
    axis.x.reserve(static_cast<std::size_t>(panels) * nodes_per_panel);
    axis.w.reserve(static_cast<std::size_t>(panels) * nodes_per_panel);
    const double width = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * width;
        const double c = a + 0.5 * width;
        const double h = 0.5 * width;
        for (int k = 0; k < nodes_per_panel; ++k) {
            axis.x.push_back(c + h * base.nodes[k]);
            axis.w.push_back(h * base.weights[k]);
        }
    }
    return axis;
}

AxisRule IntegrationConfig::axis() const {
    if (!(half_width > 0.0)) {
        throw DomainError("IntegrationConfig: half_width must be positive");
    }
    if (nodes < 21 || nodes % 2 == 0) {
        throw DomainError("IntegrationConfig: nodes must be odd and >= 21");
    }
    constexpr int kPerPanel = 11;
    int panels = (nodes + kPerPanel - 1) / kPerPanel;
    if (panels % 2 == 0) ++panels;
    return composite_axis(-half_width, half_width, panels, kPerPanel);
}

namespace {

double checked(double v) {
    if (!std::isfinite(v)) {
        throw NonFiniteSample("integrate: integrand sample is not finite");
    }
    return v;
}

}  // namespace

double integrate(const std::function<double(std::span<const double>)>& fn,
                 const IntegrationConfig& config, int dim) {
    const AxisRule ax = config.axis();
    const std::size_t n = ax.size();
    double sum = 0.0;
    if (dim == 1) {
        double pt[1];
        for (std::size_t i = 0; i < n; ++i) {
            pt[0] = ax.x[i];
            sum += ax.w[i] * checked(fn(std::span<const double>(pt, 1)));
        }
    } else if (dim == 2) {
        double pt[2];
        for (std::size_t i = 0; i < n; ++i) {
            pt[0] = ax.x[i];
            double row = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                pt[1] = ax.x[j];
                row += ax.w[j] * checked(fn(std::span<const double>(pt, 2)));
            }
            sum += ax.w[i] * row;
        }
    } else if (dim == 4) {
        double pt[4];
        for (std::size_t i = 0; i < n; ++i) {
            pt[0] = ax.x[i];
            double s1 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                pt[1] = ax.x[j];
                double s2 = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    pt[2] = ax.x[k];
                    double s3 = 0.0;
                    for (std::size_t l = 0; l < n; ++l) {
                        pt[3] = ax.x[l];
                        s3 += ax.w[l] * checked(fn(std::span<const double>(pt, 4)));
                    }
                    s2 += ax.w[k] * s3;
                }
                s1 += ax.w[j] * s2;
            }
            sum += ax.w[i] * s1;
        }
    } else {
        throw DomainError("integrate: dim must be 1, 2 or 4");
    }
    return sum;
}

GridMax argmax_on_grid(const Grid2D& grid) {
    if (grid.xs.empty() || grid.ys.empty() ||
        grid.values.size() != grid.xs.size() * grid.ys.size()) {
        throw DomainError("argmax_on_grid: empty or inconsistent grid");
    }
    GridMax best;
    best.value = grid.at(0, 0);
    for (std::size_t i = 0; i < grid.xs.size(); ++i) {
        for (std::size_t j = 0; j < grid.ys.size(); ++j) {
            const double v = grid.at(i, j);
            if (!std::isfinite(v)) {
                throw NonFiniteSample("argmax_on_grid: non-finite grid value");
            }
            if (v > best.value) {
                best.value = v;
                best.i = i;
                best.j = j;
            }
        }
    }
    best.x = grid.xs[best.i];
    best.y = grid.ys[best.j];
    return best;
}

double find_root(const std::function<double(double)>& fn, double lo, double hi,
                 double tol) {
    if (!(hi > lo) || !(tol > 0.0)) {
        throw DomainError("find_root: invalid bracket or tolerance");
    }
    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw NoSignChange("find_root: no sign change on [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = fn(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace cvqkd
