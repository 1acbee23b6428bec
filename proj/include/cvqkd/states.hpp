#pragma once

#include <complex>

namespace cvqkd {

// Phase-space point zeta = zeta_r + i zeta_i. Convention used throughout
// the library: vacuum quadrature variance 1/4, coherent-state Wigner peak
// 2/pi, homodyne outcome identified with the real part of the Wigner
// argument.
using PhasePoint = std::complex<double>;

// State family descriptor: `added` photons added, then `subtracted`
// photons subtracted, from the coherent state |alpha>. (0, 0) is the
// plain coherent state; the protocol signals use (1, 1).
struct PascsParams {
    int added = 0;
    int subtracted = 0;
    std::complex<double> alpha{0.0, 0.0};
};

// Squared norm of a^l a+^k |alpha>, as a finite Laguerre-polynomial sum.
// Zero only for degenerate inputs (subtraction annihilating the state).
// Throws DomainError when k + l exceeds the factorial-table bound.
double normalization_constant(const PascsParams& params);

double wigner_coherent(std::complex<double> alpha, PhasePoint z);
double wigner_vacuum(PhasePoint z);

// Closed-form Wigner function of the normalized photon-added-then-
// subtracted coherent state. For added == 0 the subtraction leaves the
// coherent state invariant, which also covers the removable 0/0 point at
// alpha = 0.
double wigner_pascs(const PascsParams& params, PhasePoint z);

// The four protocol signals. Bit 1 for plus/plus_i, bit 0 for the others;
// horizontal basis for plus/minus, vertical for plus_i/minus_i.
enum class SignalLabel { plus, minus, plus_i, minus_i };
enum class Basis { horizontal, vertical };

int bit_value(SignalLabel label);
Basis basis_of(SignalLabel label);
SignalLabel make_label(int bit, Basis basis);
const char* label_name(SignalLabel label);

// Coherent seed amplitude of the signal: {+a, -a, +ia, -ia}.
std::complex<double> signal_amplitude(SignalLabel label, double alpha);

// Local-oscillator angle of the measurement basis (0 or pi/2).
double measurement_angle(Basis basis);

}  // namespace cvqkd
