#include "cvqkd/states.hpp"

#include <cmath>
#include <string>

#include "cvqkd/errors.hpp"
#include "cvqkd/special_functions.hpp"

namespace cvqkd {

namespace {

void check_orders(const PascsParams& p) {
    if (p.added < 0 || p.subtracted < 0) {
        throw DomainError("PascsParams: photon counts must be non-negative");
    }
    if (p.added + p.subtracted > kMaxFactorialOrder) {
        throw DomainError("PascsParams: added + subtracted exceeds factorial bound " +
                          std::to_string(kMaxFactorialOrder));
    }
    if (!std::isfinite(p.alpha.real()) || !std::isfinite(p.alpha.imag())) {
        throw DomainError("PascsParams: alpha must be finite");
    }
}

}  // namespace

double normalization_constant(const PascsParams& params) {
    check_orders(params);
    const int k = params.added;
    const int l = params.subtracted;
    const double x = -std::norm(params.alpha);
    const double lf = factorial(l);
    double sum = 0.0;
    for (int m = 0; m <= l; ++m) {
        const double lmf = factorial(l - m);
        const double coeff = lf * lf * factorial(l + k - m) / (factorial(m) * lmf * lmf);
        const double term = coeff * laguerre(l + k - m, x);
        sum += (m % 2 == 0) ? term : -term;
    }
    return sum;
}

double wigner_coherent(std::complex<double> alpha, PhasePoint z) {
    return (2.0 / M_PI) * std::exp(-2.0 * std::norm(alpha - z));
}

double wigner_vacuum(PhasePoint z) {
    return (2.0 / M_PI) * std::exp(-2.0 * std::norm(z));
}

double wigner_pascs(const PascsParams& params, PhasePoint z) {
    check_orders(params);
    const int k = params.added;
    const int l = params.subtracted;
    if (k == 0 && l == 0) {
        return wigner_coherent(params.alpha, z);
    }
    const double norm = normalization_constant(params);
    if (norm < 1e-300) {
        if (k == 0) {
            // Subtraction alone maps |alpha> to itself; the closed form is
            // |alpha|^{2l} / N_{0,l} times the coherent Wigner with the
            // ratio identically one, so take the alpha -> 0 limit exactly.
            return wigner_coherent(params.alpha, z);
        }
        throw DegenerateState("wigner_pascs: state has zero norm");
    }
    const std::complex<double> i_unit{0.0, 1.0};
    const std::complex<double> e1 = i_unit * (2.0 * z - params.alpha);
    const std::complex<double> e2 = i_unit * std::conj(params.alpha);
    const double kf = factorial(k);
    double sum = 0.0;
    for (int n = 0; n <= k; ++n) {
        const double knf = factorial(k - n);
        const double coeff = kf * kf / (factorial(n) * knf * knf);
        // |H|^2 taken as an explicit modulus square; no imaginary residue
        // can survive.
        const double term = coeff * std::norm(bivariate_hermite(k - n, l, e1, e2));
        sum += (n % 2 == 0) ? term : -term;
    }
    return 2.0 * std::exp(-2.0 * std::norm(params.alpha - z)) / (M_PI * norm) * sum;
}

int bit_value(SignalLabel label) {
    return (label == SignalLabel::plus || label == SignalLabel::plus_i) ? 1 : 0;
}

Basis basis_of(SignalLabel label) {
    return (label == SignalLabel::plus || label == SignalLabel::minus)
               ? Basis::horizontal
               : Basis::vertical;
}

SignalLabel make_label(int bit, Basis basis) {
    if (bit != 0 && bit != 1) {
        throw DomainError("make_label: bit must be 0 or 1");
    }
    if (basis == Basis::horizontal) {
        return bit == 1 ? SignalLabel::plus : SignalLabel::minus;
    }
    return bit == 1 ? SignalLabel::plus_i : SignalLabel::minus_i;
}

const char* label_name(SignalLabel label) {
    switch (label) {
        case SignalLabel::plus: return "plus";
        case SignalLabel::minus: return "minus";
        case SignalLabel::plus_i: return "plus_i";
        case SignalLabel::minus_i: return "minus_i";
    }
    return "?";
}

std::complex<double> signal_amplitude(SignalLabel label, double alpha) {
    switch (label) {
        case SignalLabel::plus: return {alpha, 0.0};
        case SignalLabel::minus: return {-alpha, 0.0};
        case SignalLabel::plus_i: return {0.0, alpha};
        case SignalLabel::minus_i: return {0.0, -alpha};
    }
    return {0.0, 0.0};
}

double measurement_angle(Basis basis) {
    return basis == Basis::horizontal ? 0.0 : M_PI / 2.0;
}

}  // namespace cvqkd
