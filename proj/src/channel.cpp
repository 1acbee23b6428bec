#include "cvqkd/channel.hpp"

#include <cmath>

#include "cvqkd/errors.hpp"

namespace cvqkd {

BeamSplitter BeamSplitter::from_transmission(double t_squared) {
    if (!(t_squared >= 0.0 && t_squared <= 1.0)) {
        throw DomainError("BeamSplitter: transmission must lie in [0, 1]");
    }
    BeamSplitter bs;
    bs.t = std::sqrt(t_squared);
    bs.r = std::sqrt(1.0 - t_squared);
    return bs;
}

void BeamSplitter::validate() const {
    if (!(t >= 0.0 && t <= 1.0 && r >= 0.0 && r <= 1.0)) {
        throw DomainError("BeamSplitter: amplitudes must lie in [0, 1]");
    }
    if (std::abs(t * t + r * r - 1.0) > 1e-12) {
        throw DomainError("BeamSplitter: t^2 + r^2 != 1");
    }
}

double transmission_from_distance(const ChannelSpec& spec) {
    if (spec.loss_db_per_km < 0.0 || spec.distance_km < 0.0) {
        throw DomainError("ChannelSpec: loss coefficient and distance must be >= 0");
    }
    return std::pow(10.0, -spec.loss_db_per_km * spec.distance_km / 10.0);
}

TwoModeFock::TwoModeFock(int truncation_a, int truncation_b)
    : trunc_a_(truncation_a), trunc_b_(truncation_b) {
    if (truncation_a < 0 || truncation_b < 0) {
        throw DomainError("TwoModeFock: negative truncation");
    }
    c_.assign(static_cast<std::size_t>(trunc_a_ + 1) * (trunc_b_ + 1), {0.0, 0.0});
}

double TwoModeFock::norm_squared() const {
    double sum = 0.0;
    for (const auto& v : c_) sum += std::norm(v);
    return sum;
}

double TwoModeFock::mean_photons_a() const {
    double sum = 0.0;
    for (int m = 0; m <= trunc_a_; ++m) {
        for (int n = 0; n <= trunc_b_; ++n) {
            sum += m * std::norm(at(m, n));
        }
    }
    return sum;
}

double TwoModeFock::mean_photons_b() const {
    double sum = 0.0;
    for (int m = 0; m <= trunc_a_; ++m) {
        for (int n = 0; n <= trunc_b_; ++n) {
            sum += n * std::norm(at(m, n));
        }
    }
    return sum;
}

TwoModeFock bs_transform_fock(const FockVector& input, const BeamSplitter& bs) {
    bs.validate();
    const int n_max = input.truncation();
    TwoModeFock out(n_max, n_max);
    std::vector<double> tpow(static_cast<std::size_t>(n_max) + 1);
    std::vector<double> rpow(static_cast<std::size_t>(n_max) + 1);
    tpow[0] = rpow[0] = 1.0;
    for (int i = 1; i <= n_max; ++i) {
        tpow[i] = tpow[i - 1] * bs.t;
        rpow[i] = rpow[i - 1] * bs.r;
    }
    // |n, 0> -> sum_j sqrt(C(n, j)) T^{n-j} (-R)^j |n-j, j>.
    for (int n = 0; n <= n_max; ++n) {
        const std::complex<double> cn = input.coeff(n);
        if (cn == std::complex<double>{0.0, 0.0}) continue;
        double binom = 1.0;  // C(n, j), updated along j
        for (int j = 0; j <= n; ++j) {
            const double amp = std::sqrt(binom) * tpow[n - j] * rpow[j];
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            out.at(n - j, j) += cn * (sign * amp);
            binom = binom * (n - j) / (j + 1.0);
        }
    }
    return out;
}

double joint_wigner(const PascsParams& params, const BeamSplitter& bs,
                    PhasePoint beta, PhasePoint eps) {
    bs.validate();
    const PhasePoint signal_arg = bs.t * beta - bs.r * eps;
    const PhasePoint vacuum_arg = bs.r * beta + bs.t * eps;
    return wigner_pascs(params, signal_arg) * wigner_vacuum(vacuum_arg);
}

double joint_quadrature_pdf(const TwoModeFock& state, double xa, double xb) {
    const int na = state.truncation_a();
    const int nb = state.truncation_b();
    std::vector<double> ha(static_cast<std::size_t>(na) + 1);
    std::vector<double> hb(static_cast<std::size_t>(nb) + 1);
    for (int m = 0; m <= na; ++m) ha[m] = hermite_function(m, xa);
    for (int n = 0; n <= nb; ++n) hb[n] = hermite_function(n, xb);
    std::complex<double> amp{0.0, 0.0};
    for (int m = 0; m <= na; ++m) {
        std::complex<double> row{0.0, 0.0};
        for (int n = 0; n <= nb; ++n) {
            row += state.at(m, n) * hb[n];
        }
        amp += ha[m] * row;
    }
    return std::norm(amp);
}

double mode_a_quadrature_pdf(const TwoModeFock& state, double angle, double x) {
    const int na = state.truncation_a();
    const int nb = state.truncation_b();
    std::vector<double> ha(static_cast<std::size_t>(na) + 1);
    for (int m = 0; m <= na; ++m) ha[m] = hermite_function(m, x);
    const std::complex<double> rot{std::cos(angle), -std::sin(angle)};
    double sum = 0.0;
    for (int n = 0; n <= nb; ++n) {
        std::complex<double> g{0.0, 0.0};
        std::complex<double> rot_m{1.0, 0.0};
        for (int m = 0; m <= na; ++m) {
            g += state.at(m, n) * rot_m * ha[m];
            rot_m *= rot;
        }
        sum += std::norm(g);
    }
    return sum;
}

double mode_b_quadrature_pdf(const TwoModeFock& state, double angle, double x) {
    const int na = state.truncation_a();
    const int nb = state.truncation_b();
    std::vector<double> hb(static_cast<std::size_t>(nb) + 1);
    for (int n = 0; n <= nb; ++n) hb[n] = hermite_function(n, x);
    const std::complex<double> rot{std::cos(angle), -std::sin(angle)};
    double sum = 0.0;
    for (int m = 0; m <= na; ++m) {
        std::complex<double> g{0.0, 0.0};
        std::complex<double> rot_n{1.0, 0.0};
        for (int n = 0; n <= nb; ++n) {
            g += state.at(m, n) * rot_n * hb[n];
            rot_n *= rot;
        }
        sum += std::norm(g);
    }
    return sum;
}

}  // namespace cvqkd
