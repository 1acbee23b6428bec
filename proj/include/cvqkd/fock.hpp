#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cvqkd/states.hpp"

namespace cvqkd {

// Truncated number-basis state, immutable once built. Serves as the
// brute-force oracle backbone: everything here is independent of the
// closed-form Wigner path.
class FockVector {
  public:
    static constexpr double kTailTolerance = 1e-10;

    // Normalizes `coeffs` (c_0 .. c_N). Throws DegenerateState on a zero
    // vector and TruncationTooSmall when |c_N|^2 exceeds the tail
    // tolerance after normalization.
    static FockVector from_coefficients(std::vector<std::complex<double>> coeffs);

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const std::complex<double>> coeffs() const { return coeffs_; }
    std::complex<double> coeff(int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    double mean_photon_number() const;

  private:
    explicit FockVector(std::vector<std::complex<double>> coeffs)
        : coeffs_(std::move(coeffs)) {}
    std::vector<std::complex<double>> coeffs_;
};

// Truncation heuristic N_max = ceil(|alpha|^2 + 10 |alpha| + 20); keeps the
// tail below 1e-10 for |alpha| <= 3.
int default_truncation(std::complex<double> alpha);

FockVector coherent_fock(std::complex<double> alpha, int truncation);

// Number-basis coefficients of a^l a+^k |alpha>, before normalization.
// Exposed so tests can check the squared norm against
// normalization_constant().
std::vector<std::complex<double>> pascs_unnormalized_coeffs(const PascsParams& params,
                                                            int truncation);

// Normalized number-basis expansion of the state described by `params`.
// Degenerate subtraction-only inputs (k = 0, alpha = 0) fall back to the
// coherent state they limit to.
FockVector fock_coefficients(const PascsParams& params, int truncation);
FockVector fock_coefficients(const PascsParams& params);

// <m|D(gamma)|n> with D the displacement operator, by the explicit
// factorial sum evaluated in log space.
std::complex<double> displacement_element(int m, int n, std::complex<double> gamma);

// Parity-series Wigner oracle: (2/pi) sum_n (-1)^n <n|D(-z) rho D(z)|n>,
// contracted to (2/pi) <psi|D(2z) parity|psi> over the stored
// coefficients. Independent of wigner_pascs.
double wigner_from_fock(const FockVector& state, PhasePoint z);

// Normalized position wavefunction for vacuum variance 1/4:
//   psi_n(x) = (2/pi)^{1/4} (2^n n!)^{-1/2} H_n(sqrt(2) x) e^{-x^2},
// evaluated by the stable normalized recurrence.
double hermite_function(int n, double x);

// Homodyne outcome density at local-oscillator angle `angle`:
//   |sum_n c_n e^{-i n angle} psi_n(x)|^2.
double quadrature_pdf(const FockVector& state, double angle, double x);

}  // namespace cvqkd
