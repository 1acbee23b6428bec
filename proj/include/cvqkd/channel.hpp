#pragma once

#include <complex>
#include <vector>

#include "cvqkd/fock.hpp"
#include "cvqkd/states.hpp"

namespace cvqkd {

// Lossy-line model: asymmetric beam splitter with vacuum on the idle port.
struct BeamSplitter {
    double t = 1.0;  // transmission amplitude
    double r = 0.0;  // reflection amplitude

    static BeamSplitter from_transmission(double t_squared);
    void validate() const;  // t^2 + r^2 = 1 within 1e-12, both in [0, 1]
};

struct ChannelSpec {
    double loss_db_per_km = 0.2;
    double distance_km = 0.0;
};

// Channel transmission T^2 = 10^(-loss * distance / 10).
double transmission_from_distance(const ChannelSpec& spec);

// Two-mode pure state after the splitter. Mode A is the transmitted
// (Bob) port, mode B the reflected (Eve) port; c(m, n) = <m, n|state>.
class TwoModeFock {
  public:
    TwoModeFock(int truncation_a, int truncation_b);

    int truncation_a() const { return trunc_a_; }
    int truncation_b() const { return trunc_b_; }
    std::complex<double>& at(int m, int n) {
        return c_[static_cast<std::size_t>(m) * (trunc_b_ + 1) + n];
    }
    std::complex<double> at(int m, int n) const {
        return c_[static_cast<std::size_t>(m) * (trunc_b_ + 1) + n];
    }
    double norm_squared() const;
    double mean_photons_a() const;
    double mean_photons_b() const;

  private:
    int trunc_a_;
    int trunc_b_;
    std::vector<std::complex<double>> c_;
};

// Exact binomial beam-splitter action on |input>|0>. The coherent
// amplitude map is alpha -> (T alpha, -R alpha); a single photon splits as
// T |1,0> - R |0,1>.
TwoModeFock bs_transform_fock(const FockVector& input, const BeamSplitter& bs);

// Two-mode output Wigner function of the splitter fed with the state of
// `params` and vacuum: W_sig(T beta - R eps) * W_vac(R beta + T eps).
double joint_wigner(const PascsParams& params, const BeamSplitter& bs,
                    PhasePoint beta, PhasePoint eps);

// x-quadrature densities of the two-mode state. Angles rotate each mode
// before the position projection; orthonormality of the wavefunctions
// removes the traced mode exactly.
double joint_quadrature_pdf(const TwoModeFock& state, double xa, double xb);
double mode_a_quadrature_pdf(const TwoModeFock& state, double angle, double x);
double mode_b_quadrature_pdf(const TwoModeFock& state, double angle, double x);

}  // namespace cvqkd
