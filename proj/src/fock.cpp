#include "cvqkd/fock.hpp"

#include <cmath>
#include <string>

#include "cvqkd/errors.hpp"

namespace cvqkd {

namespace {

double log_factorial(int n) {
    return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace

FockVector FockVector::from_coefficients(std::vector<std::complex<double>> coeffs) {
    if (coeffs.empty()) {
        throw DomainError("FockVector: empty coefficient vector");
    }
    double norm2 = 0.0;
    for (const auto& c : coeffs) norm2 += std::norm(c);
    if (!(norm2 > 1e-300)) {
        throw DegenerateState("FockVector: zero-norm state");
    }
    const double tail = std::norm(coeffs.back()) / norm2;
    if (tail >= kTailTolerance) {
        throw TruncationTooSmall("FockVector: tail mass " + std::to_string(tail) +
                                 " at truncation " +
                                 std::to_string(coeffs.size() - 1));
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : coeffs) c *= inv;
    return FockVector(std::move(coeffs));
}

double FockVector::mean_photon_number() const {
    double sum = 0.0;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        sum += static_cast<double>(n) * std::norm(coeffs_[n]);
    }
    return sum;
}

int default_truncation(std::complex<double> alpha) {
    const double a = std::abs(alpha);
    return static_cast<int>(std::ceil(a * a + 10.0 * a + 20.0));
}

namespace {

std::vector<std::complex<double>> coherent_coeffs(std::complex<double> alpha, int n_max) {
    std::vector<std::complex<double>> c(static_cast<std::size_t>(n_max) + 1);
    c[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n <= n_max; ++n) {
        c[n] = c[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    }
    return c;
}

}  // namespace

FockVector coherent_fock(std::complex<double> alpha, int truncation) {
    if (truncation < 0) {
        throw DomainError("coherent_fock: negative truncation");
    }
    return FockVector::from_coefficients(coherent_coeffs(alpha, truncation));
}

std::vector<std::complex<double>> pascs_unnormalized_coeffs(const PascsParams& params,
                                                            int truncation) {
    if (truncation < 0) {
        throw DomainError("pascs_unnormalized_coeffs: negative truncation");
    }
    const int k = params.added;
    const int l = params.subtracted;
    if (k < 0 || l < 0) {
        throw DomainError("pascs_unnormalized_coeffs: negative photon counts");
    }
    // Coherent expansion with headroom l, so the final lowering reaches
    // index `truncation` exactly.
    const int work = truncation + l;
    std::vector<std::complex<double>> c = coherent_coeffs(params.alpha, work);
    // Raise k times: (a+ v)_n = sqrt(n) v_{n-1}.
    for (int pass = 0; pass < k; ++pass) {
        for (int n = work; n >= 1; --n) {
            c[n] = std::sqrt(static_cast<double>(n)) * c[n - 1];
        }
        c[0] = 0.0;
    }
    // Lower l times: (a v)_n = sqrt(n+1) v_{n+1}.
    for (int pass = 0; pass < l; ++pass) {
        for (int n = 0; n < work; ++n) {
            c[n] = std::sqrt(static_cast<double>(n) + 1.0) * c[n + 1];
        }
        c[work] = 0.0;
    }
    c.resize(static_cast<std::size_t>(truncation) + 1);
    return c;
}

FockVector fock_coefficients(const PascsParams& params, int truncation) {
    std::vector<std::complex<double>> c = pascs_unnormalized_coeffs(params, truncation);
    double norm2 = 0.0;
    for (const auto& v : c) norm2 += std::norm(v);
    if (!(norm2 > 1e-300)) {
        if (params.added == 0) {
            // Subtraction alone leaves a coherent state coherent; at
            // alpha = 0 the limit is the vacuum.
            return coherent_fock(params.alpha, truncation);
        }
        throw DegenerateState("fock_coefficients: photon subtraction annihilated the state");
    }
    return FockVector::from_coefficients(std::move(c));
}

FockVector fock_coefficients(const PascsParams& params) {
    return fock_coefficients(params, default_truncation(params.alpha));
}

std::complex<double> displacement_element(int m, int n, std::complex<double> gamma) {
    if (m < 0 || n < 0) {
        throw DomainError("displacement_element: negative index");
    }
    const double mag = std::abs(gamma);
    if (mag < 1e-300) {
        return m == n ? 1.0 : 0.0;
    }
    const double log_mag = std::log(mag);
    const double phase = std::arg(gamma);
    // gamma^{m-j} (-conj(gamma))^{n-j}: the magnitude goes into log space,
    // the phases accumulate as (m-j) arg(gamma) + (n-j)(pi - arg(gamma)).
    const double lead = -0.5 * mag * mag + 0.5 * (log_factorial(m) + log_factorial(n));
    std::complex<double> sum{0.0, 0.0};
    const int jmax = m < n ? m : n;
    for (int j = 0; j <= jmax; ++j) {
        const double lm = lead + (m + n - 2 * j) * log_mag - log_factorial(m - j) -
                          log_factorial(n - j) - log_factorial(j);
        const double ph = (m - j) * phase + (n - j) * (M_PI - phase);
        sum += std::exp(lm) * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    return sum;
}

double wigner_from_fock(const FockVector& state, PhasePoint z) {
    const auto c = state.coeffs();
    const int n_max = state.truncation();
    const std::complex<double> gamma = 2.0 * z;
    // (2/pi) <psi| D(2z) parity |psi>; hermiticity of the observable makes
    // the double sum real, so fold conjugate pairs explicitly.
    double acc = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        // Diagonal term.
        acc += sign * std::real(std::conj(c[n]) * c[n] * displacement_element(n, n, gamma));
        for (int m = n + 1; m <= n_max; ++m) {
            const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
            const std::complex<double> dmn = displacement_element(m, n, gamma);
            const std::complex<double> dnm = displacement_element(n, m, gamma);
            acc += std::real(std::conj(c[m]) * c[n] * sign * dmn) +
                   std::real(std::conj(c[n]) * c[m] * sign_m * dnm);
        }
    }
    return (2.0 / M_PI) * acc;
}

double hermite_function(int n, double x) {
    if (n < 0) {
        throw DomainError("hermite_function: negative order");
    }
    const double h0 = std::pow(2.0 / M_PI, 0.25) * std::exp(-x * x);
    if (n == 0) return h0;
    double prev = h0;
    double cur = 2.0 * x * h0;  // psi_1 = 2x psi_0
    for (int k = 1; k < n; ++k) {
        const double next = (2.0 * x * cur - std::sqrt(static_cast<double>(k)) * prev) /
                            std::sqrt(static_cast<double>(k) + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double quadrature_pdf(const FockVector& state, double angle, double x) {
    const auto c = state.coeffs();
    const int n_max = state.truncation();
    const double h0 = std::pow(2.0 / M_PI, 0.25) * std::exp(-x * x);
    std::complex<double> amp = c[0] * h0;
    double prev = h0;
    double cur = 2.0 * x * h0;
    const std::complex<double> rot{std::cos(angle), -std::sin(angle)};
    std::complex<double> rot_n = rot;
    for (int n = 1; n <= n_max; ++n) {
        amp += c[n] * rot_n * cur;
        rot_n *= rot;
        const double next = (2.0 * x * cur - std::sqrt(static_cast<double>(n)) * prev) /
                            std::sqrt(static_cast<double>(n) + 1.0);
        prev = cur;
        cur = next;
    }
    return std::norm(amp);
}

}  // namespace cvqkd
