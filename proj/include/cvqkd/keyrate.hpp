#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cvqkd/channel.hpp"
#include "cvqkd/exec.hpp"
#include "cvqkd/numerics.hpp"
#include "cvqkd/states.hpp"

namespace cvqkd {

enum class StateFamily { pascs, coherent };
const char* family_name(StateFamily family);
StateFamily family_from_name(const std::string& name);

// Signal parameters of the family: photon-added-then-subtracted (1, 1)
// or plain coherent (0, 0).
PascsParams family_params(StateFamily family, std::complex<double> alpha);

struct AttackScenario {
    StateFamily family = StateFamily::pascs;
    double alpha = 1.0;  // real protocol amplitude, > 0
    BeamSplitter bs;

    // Signal state for the horizontal pair; sign is +1 or -1.
    PascsParams signal_params(int sign) const;
    void validate() const;
};

// Quadrature layout of the attack pipeline. Panel boundaries (not node
// counts) define where thresholds can cut, so refining node counts never
// moves a snapped threshold.
struct PipelineGrids {
    // Bob axis: fine panels where thresholds live, coarse panels beyond.
    double beta_fine_step = 0.05;  // also the threshold snapping resolution
    double beta_fine_max = 3.6;
    double beta_coarse_step = 0.45;
    int beta_fine_nodes = 3;
    int beta_coarse_nodes = 7;
    // Eve axis.
    double eps_panel = 1.0;
    int eps_nodes = 9;
    // 1D quadrature of Wigner slices along the imaginary axis.
    int marginal_panels = 5;
    int marginal_nodes = 13;
    // Honest 2D quadrature (contract checks) over (beta_i, eps_i).
    int inner_panels = 7;
    int inner_nodes = 13;
    // Domain half-widths: mean-field reach 1.4 * alpha plus this margin.
    double tail_margin = 5.0;

    PipelineGrids doubled() const;
};

// x-marginal of the signal Wigner function, by 1D quadrature over the
// imaginary axis (the production route behind every reduced density).
double signal_marginal(const PascsParams& params, double x,
                       const PipelineGrids& grids = {});

// Joint density of Bob's and Eve's x-quadratures, P_{sign}(beta_r, eps_r):
// the two-mode output Wigner function integrated over both imaginary
// axes by an honest 2D tensor-product rule.
double joint_prob(const AttackScenario& scenario, int sign, double beta_r,
                  double eps_r, const PipelineGrids& grids = {});

// Same quantity through the exact rotation split
// P = m_signal(T beta_r - R eps_r) * m_vacuum(R beta_r + T eps_r);
// this is the fast path the cached tables use.
double joint_prob_split(const AttackScenario& scenario, int sign, double beta_r,
                        double eps_r, const PipelineGrids& grids = {});

// Bob's accepted-axis marginal P'_{sign}(beta_r).
double bob_marginal(const AttackScenario& scenario, int sign, double beta_r,
                    const PipelineGrids& grids = {});

struct Acceptance {
    double p0 = 0.0;
    double p1 = 0.0;
    double r_acc = 0.0;
};

struct KeyRateReport {
    double alpha = 0.0;
    double beta_c_requested = 0.0;
    double beta_c = 0.0;            // snapped onto a panel boundary
    double beta_c_resolution = 0.0; // width of the panel the threshold sits on
    double t_squared = 1.0;
    double p0 = 0.0;
    double p1 = 0.0;
    double r_acc = 0.0;
    double i_ab = 0.0;
    double p_c = 0.5;
    double tau = 0.0;
    double s_ab = 0.0;          // may be negative
    double s_ab_clamped = 0.0;  // max(s_ab, 0)
    std::string note;           // empty or "zero-acceptance"

    void validate() const;  // throws AuditFailure on violated invariants
};

// Reduced joint distributions P_+/- cached on the pipeline grids; all
// threshold integrals are partial sums over whole panels. The minus table
// is the parity image of the plus table (exact for mirrored axes).
class JointTable {
  public:
    JointTable(const AttackScenario& scenario, const PipelineGrids& grids = {},
               Exec exec = Exec::parallel);

    const AttackScenario& scenario() const { return scenario_; }
    std::span<const double> beta_nodes() const { return beta_.x; }
    std::span<const double> beta_weights() const { return beta_.w; }
    std::span<const double> eps_nodes() const { return eps_.x; }
    std::span<const double> eps_weights() const { return eps_.w; }

    double p_plus(std::size_t i, std::size_t j) const;
    double p_minus(std::size_t i, std::size_t j) const;
    double bob_marginal_node(std::size_t i) const { return marginal_[i]; }

    double total_mass() const;  // ~1
    double snap_threshold(double beta_c) const;
    double snap_resolution(double beta_c) const;

    Acceptance acceptance(double beta_c) const;
    double shannon_info(double beta_c) const;  // throws ZeroAcceptance
    // Collision probability of Eve's post-selection-conditioned data and
    // the privacy-amplification reduction tau = 1 + log2(p_c).
    std::pair<double, double> collision_probability(double beta_c) const;
    KeyRateReport report(double beta_c) const;

    // Moments of P_+ over the cached grid.
    double mean_beta() const;
    double mean_eps() const;
    double covariance() const;

  private:
    std::size_t accepted_offset(double beta_c) const;

    AttackScenario scenario_;
    PipelineGrids grids_;
    AxisRule beta_;
    AxisRule eps_;
    std::vector<double> boundaries_;  // positive-half panel boundaries
    std::vector<std::size_t> boundary_offsets_;
    std::vector<double> table_;      // P_+ row-major [i * n_eps + j]
    std::vector<double> marginal_;   // P'_+(beta_i)
};

// One-shot wrappers over a freshly built table.
Acceptance acceptance(const AttackScenario& scenario, double beta_c,
                      const PipelineGrids& grids = {});
double shannon_info(const AttackScenario& scenario, double beta_c,
                    const PipelineGrids& grids = {});
std::pair<double, double> collision_probability(const AttackScenario& scenario,
                                                double beta_c,
                                                const PipelineGrids& grids = {});
KeyRateReport secret_key_rate(const AttackScenario& scenario, double beta_c,
                              const PipelineGrids& grids = {});

struct Range {
    double min = 0.0;
    double max = 0.0;
    double step = 1.0;
    std::vector<double> values() const;
};

struct SweepResult {
    StateFamily family = StateFamily::pascs;
    double t_squared = 1.0;
    std::vector<double> alphas;
    std::vector<double> beta_cs;
    std::vector<KeyRateReport> reports;  // row-major [ia * n_bc + ib]
    Grid2D s_ab;
    GridMax best;
};

SweepResult sweep_keyrate(StateFamily family, double t_squared,
                          const Range& alpha_range, const Range& beta_c_range,
                          const PipelineGrids& grids = {},
                          Exec exec = Exec::parallel);

struct DistancePoint {
    double distance_km = 0.0;
    double t_squared = 1.0;
    KeyRateReport best;  // report at the (alpha, beta_c) grid optimum
};

std::vector<DistancePoint> keyrate_vs_distance(
    StateFamily family, const std::vector<double>& distances_km,
    double loss_db_per_km, const Range& alpha_range, const Range& beta_c_range,
    const PipelineGrids& grids = {}, Exec exec = Exec::parallel);

}  // namespace cvqkd
