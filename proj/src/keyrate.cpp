#include "cvqkd/keyrate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvqkd/errors.hpp"

namespace cvqkd {

namespace {

// Mean-field reach of the shipped families: the (1,1) state peaks at
// alpha * (1 + (1 + alpha^2) / N) <= 1.4 alpha.
constexpr double kMeanFieldScale = 1.4;

constexpr double kNegativeDensityTolerance = 1e-9;

double sqrt_two_over_pi() { return std::sqrt(2.0 / M_PI); }

double vacuum_marginal(double x) {
    return sqrt_two_over_pi() * std::exp(-2.0 * x * x);
}

}  // namespace

const char* family_name(StateFamily family) {
    return family == StateFamily::pascs ? "pascs" : "coherent";
}

StateFamily family_from_name(const std::string& name) {
    if (name == "pascs") return StateFamily::pascs;
    if (name == "coherent") return StateFamily::coherent;
    throw ConfigError("family: expected 'pascs' or 'coherent', got '" + name + "'");
}

PascsParams family_params(StateFamily family, std::complex<double> alpha) {
    PascsParams p;
    p.alpha = alpha;
    if (family == StateFamily::pascs) {
        p.added = 1;
        p.subtracted = 1;
    }
    return p;
}

PascsParams AttackScenario::signal_params(int sign) const {
    return family_params(family, {sign >= 0 ? alpha : -alpha, 0.0});
}

void AttackScenario::validate() const {
    if (!(alpha > 0.0)) {
        throw DomainError("AttackScenario: alpha must be positive");
    }
    bs.validate();
}

PipelineGrids PipelineGrids::doubled() const {
    PipelineGrids g = *this;
    g.beta_fine_nodes *= 2;
    g.beta_coarse_nodes *= 2;
    g.eps_nodes *= 2;
    g.marginal_nodes *= 2;
    g.inner_nodes *= 2;
    return g;
}

double signal_marginal(const PascsParams& params, double x,
                       const PipelineGrids& grids) {
    const double ci = params.alpha.imag();
    const AxisRule u = composite_axis(ci - 6.0, ci + 6.0, grids.marginal_panels,
                                      grids.marginal_nodes);
    double sum = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        sum += u.w[k] * wigner_pascs(params, {x, u.x[k]});
    }
    return sum;
}

double joint_prob(const AttackScenario& scenario, int sign, double beta_r,
                  double eps_r, const PipelineGrids& grids) {
    scenario.validate();
    const PascsParams params = scenario.signal_params(sign);
    const double hw = 8.6 + std::abs(params.alpha.imag());
    const AxisRule ax =
        composite_axis(-hw, hw, grids.inner_panels, grids.inner_nodes);
    double sum = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i) {
        const double beta_i = ax.x[i];
        double row = 0.0;
        for (std::size_t j = 0; j < ax.size(); ++j) {
            const double eps_i = ax.x[j];
            row += ax.w[j] * joint_wigner(params, scenario.bs, {beta_r, beta_i},
                                          {eps_r, eps_i});
        }
        sum += ax.w[i] * row;
    }
    return sum;
}

double joint_prob_split(const AttackScenario& scenario, int sign, double beta_r,
                        double eps_r, const PipelineGrids& grids) {
    const PascsParams params = scenario.signal_params(sign);
    const double u = scenario.bs.t * beta_r - scenario.bs.r * eps_r;
    const double v = scenario.bs.r * beta_r + scenario.bs.t * eps_r;
    return signal_marginal(params, u, grids) * vacuum_marginal(v);
}

double bob_marginal(const AttackScenario& scenario, int sign, double beta_r,
                    const PipelineGrids& grids) {
    scenario.validate();
    const PascsParams params = scenario.signal_params(sign);
    const double l_eps =
        scenario.bs.r * kMeanFieldScale * scenario.alpha + grids.tail_margin;
    const int panels =
        std::max(1, static_cast<int>(std::ceil(2.0 * l_eps / grids.eps_panel)));
    const AxisRule eps = composite_axis(-l_eps, l_eps, panels, grids.eps_nodes);
    double sum = 0.0;
    for (std::size_t j = 0; j < eps.size(); ++j) {
        const double u = scenario.bs.t * beta_r - scenario.bs.r * eps.x[j];
        const double v = scenario.bs.r * beta_r + scenario.bs.t * eps.x[j];
        sum += eps.w[j] * signal_marginal(params, u, grids) * vacuum_marginal(v);
    }
    return sum;
}

void KeyRateReport::validate() const {
    const double slack = 1e-9;
    auto fail = [](const std::string& what) {
        throw AuditFailure("KeyRateReport: " + what);
    };
    if (!(p0 >= -slack && p0 <= 1.0 + slack)) fail("p0 outside [0, 1]");
    if (!(p1 >= -slack && p1 <= 1.0 + slack)) fail("p1 outside [0, 1]");
    if (std::abs(r_acc - 0.5 * (p0 + p1)) > 1e-12) fail("r_acc != (p0 + p1) / 2");
    if (!(i_ab >= -slack && i_ab <= 1.0 + slack)) fail("i_ab outside [0, 1]");
    if (!(p_c >= 0.5 - slack && p_c <= 1.0 + slack)) fail("p_c outside [1/2, 1]");
    if (std::abs(tau - (1.0 + std::log2(p_c))) > 1e-12) fail("tau != 1 + log2(p_c)");
    if (!(tau >= -slack && tau <= 1.0 + slack)) fail("tau outside [0, 1]");
    if (std::abs(s_ab - r_acc * (i_ab - tau)) > 1e-12) fail("s_ab != r_acc (i_ab - tau)");
    if (s_ab_clamped != std::max(s_ab, 0.0)) fail("s_ab_clamped mismatch");
}

JointTable::JointTable(const AttackScenario& scenario, const PipelineGrids& grids,
                       Exec exec)
    : scenario_(scenario), grids_(grids) {
    scenario_.validate();
    const double reach = kMeanFieldScale * scenario_.alpha;
    const double l_beta = std::max(reach + grids_.tail_margin,
                                   grids_.beta_fine_max + grids_.beta_coarse_step);
    const double l_eps = scenario_.bs.r * reach + grids_.tail_margin;

    // Positive-half beta axis: fine panels up to beta_fine_max, coarse
    // panels to l_beta; the full axis is the exact mirror of the half.
    const int n_fine =
        static_cast<int>(std::round(grids_.beta_fine_max / grids_.beta_fine_step));
    const int n_coarse = std::max(
        1, static_cast<int>(std::ceil((l_beta - grids_.beta_fine_max) /
                                      grids_.beta_coarse_step)));
    const AxisRule fine = composite_axis(0.0, grids_.beta_fine_max, n_fine,
                                         grids_.beta_fine_nodes);
    const AxisRule coarse = composite_axis(grids_.beta_fine_max, l_beta, n_coarse,
                                           grids_.beta_coarse_nodes);

    std::vector<double> half_x(fine.x);
    half_x.insert(half_x.end(), coarse.x.begin(), coarse.x.end());
    std::vector<double> half_w(fine.w);
    half_w.insert(half_w.end(), coarse.w.begin(), coarse.w.end());

    boundaries_.clear();
    boundary_offsets_.clear();
    for (int b = 0; b <= n_fine; ++b) {
        boundaries_.push_back(b * grids_.beta_fine_step);
        boundary_offsets_.push_back(static_cast<std::size_t>(b) *
                                    grids_.beta_fine_nodes);
    }
    const double coarse_width = (l_beta - grids_.beta_fine_max) / n_coarse;
    for (int b = 1; b <= n_coarse; ++b) {
        boundaries_.push_back(grids_.beta_fine_max + b * coarse_width);
        boundary_offsets_.push_back(fine.x.size() +
                                    static_cast<std::size_t>(b) * grids_.beta_coarse_nodes);
    }

    beta_.lo = -l_beta;
    beta_.hi = l_beta;
    beta_.x.resize(2 * half_x.size());
    beta_.w.resize(2 * half_w.size());
    const std::size_t nh = half_x.size();
    for (std::size_t i = 0; i < nh; ++i) {
        beta_.x[nh + i] = half_x[i];
        beta_.w[nh + i] = half_w[i];
        beta_.x[nh - 1 - i] = -half_x[i];
        beta_.w[nh - 1 - i] = half_w[i];
    }

    // Eve axis, mirrored the same way.
    const int eps_half_panels =
        std::max(1, static_cast<int>(std::ceil(l_eps / grids_.eps_panel)));
    const AxisRule eps_half =
        composite_axis(0.0, l_eps, eps_half_panels, grids_.eps_nodes);
    eps_.lo = -l_eps;
    eps_.hi = l_eps;
    const std::size_t ne_half = eps_half.x.size();
    eps_.x.resize(2 * ne_half);
    eps_.w.resize(2 * ne_half);
    for (std::size_t j = 0; j < ne_half; ++j) {
        eps_.x[ne_half + j] = eps_half.x[j];
        eps_.w[ne_half + j] = eps_half.w[j];
        eps_.x[ne_half - 1 - j] = -eps_half.x[j];
        eps_.w[ne_half - 1 - j] = eps_half.w[j];
    }

    // Fill P_+ row by row; rows are independent.
    const PascsParams plus = scenario_.signal_params(+1);
    const std::size_t n_beta = beta_.size();
    const std::size_t n_eps = eps_.size();
    table_.assign(n_beta * n_eps, 0.0);
    const double t = scenario_.bs.t;
    const double r = scenario_.bs.r;
    const PipelineGrids grids_copy = grids_;
    for_each_index(exec, static_cast<int>(n_beta), [&](int i) {
        const double b = beta_.x[static_cast<std::size_t>(i)];
        double* row = table_.data() + static_cast<std::size_t>(i) * n_eps;
        for (std::size_t j = 0; j < n_eps; ++j) {
            const double e = eps_.x[j];
            const double value = signal_marginal(plus, t * b - r * e, grids_copy) *
                                 vacuum_marginal(r * b + t * e);
            if (value < -kNegativeDensityTolerance) {
                throw AuditFailure("JointTable: density below -1e-9");
            }
            row[j] = std::max(value, 0.0);
        }
    });

    marginal_.assign(n_beta, 0.0);
    for (std::size_t i = 0; i < n_beta; ++i) {
        double sum = 0.0;
        const double* row = table_.data() + i * n_eps;
        for (std::size_t j = 0; j < n_eps; ++j) sum += eps_.w[j] * row[j];
        marginal_[i] = sum;
    }
}

double JointTable::p_plus(std::size_t i, std::size_t j) const {
    return table_[i * eps_.size() + j];
}

double JointTable::p_minus(std::size_t i, std::size_t j) const {
    // Parity: P_-(b, e) = P_+(-b, -e) on the mirror-symmetric axes.
    return p_plus(beta_.size() - 1 - i, eps_.size() - 1 - j);
}

double JointTable::total_mass() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < beta_.size(); ++i) {
        sum += beta_.w[i] * marginal_[i];
    }
    return sum;
}

double JointTable::snap_threshold(double beta_c) const {
    if (!(beta_c >= 0.0)) {
        throw DomainError("beta_c must be >= 0");
    }
    const auto it =
        std::lower_bound(boundaries_.begin(), boundaries_.end(), beta_c);
    if (it == boundaries_.end()) return boundaries_.back();
    if (it == boundaries_.begin()) return boundaries_.front();
    const double hi = *it;
    const double lo = *(it - 1);
    return (beta_c - lo <= hi - beta_c) ? lo : hi;
}

double JointTable::snap_resolution(double beta_c) const {
    const double snapped = snap_threshold(beta_c);
    const auto it =
        std::lower_bound(boundaries_.begin(), boundaries_.end(), snapped - 1e-12);
    const std::size_t idx = static_cast<std::size_t>(it - boundaries_.begin());
    if (idx + 1 < boundaries_.size()) return boundaries_[idx + 1] - boundaries_[idx];
    return boundaries_[idx] - boundaries_[idx - 1];
}

std::size_t JointTable::accepted_offset(double beta_c) const {
    const double snapped = snap_threshold(beta_c);
    for (std::size_t b = 0; b < boundaries_.size(); ++b) {
        if (std::abs(boundaries_[b] - snapped) < 1e-12) return boundary_offsets_[b];
    }
    return boundary_offsets_.back();
}

Acceptance JointTable::acceptance(double beta_c) const {
    const std::size_t offset = accepted_offset(beta_c);
    const std::size_t nh = beta_.size() / 2;
    Acceptance acc;
    for (std::size_t i = nh + offset; i < beta_.size(); ++i) {
        acc.p1 += beta_.w[i] * marginal_[i];
    }
    for (std::size_t i = 0; i + offset < nh; ++i) {
        acc.p0 += beta_.w[i] * marginal_[i];
    }
    acc.r_acc = 0.5 * (acc.p0 + acc.p1);
    return acc;
}

double JointTable::shannon_info(double beta_c) const {
    const Acceptance acc = acceptance(beta_c);
    const double mass = acc.p0 + acc.p1;
    if (acc.r_acc <= 1e-15) {
        throw ZeroAcceptance("shannon_info: no accepted probability mass");
    }
    const std::size_t nh = beta_.size() / 2;
    const std::size_t offset = accepted_offset(beta_c);
    double info = 0.0;
    for (std::size_t i = nh + offset; i < beta_.size(); ++i) {
        const double qp = marginal_[i];
        const double qm = marginal_[beta_.size() - 1 - i];
        const double s = qp + qm;
        if (s < 1e-300) continue;
        const double delta = qm / s;
        double bracket = 1.0;
        if (delta > 1e-300 && delta < 1.0 - 1e-16) {
            bracket = 1.0 + delta * std::log2(delta) +
                      (1.0 - delta) * std::log2(1.0 - delta);
        }
        info += beta_.w[i] * s / mass * bracket;
    }
    if (info > 1.0 + 1e-9) {
        throw AuditFailure("shannon_info: I_AB exceeds 1 bit");
    }
    return std::clamp(info, 0.0, 1.0);
}

std::pair<double, double> JointTable::collision_probability(double beta_c) const {
    const Acceptance acc = acceptance(beta_c);
    const double mass = acc.p0 + acc.p1;
    if (acc.r_acc <= 1e-15) {
        throw ZeroAcceptance("collision_probability: no accepted probability mass");
    }
    const std::size_t nh = beta_.size() / 2;
    const std::size_t offset = accepted_offset(beta_c);
    const std::size_t n_eps = eps_.size();
    // Eve's conditional density for the plus state; the minus state is its
    // mirror image in eps.
    std::vector<double> cond(n_eps, 0.0);
    for (std::size_t i = nh + offset; i < beta_.size(); ++i) {
        const double w = beta_.w[i];
        const double* row = table_.data() + i * n_eps;
        for (std::size_t j = 0; j < n_eps; ++j) cond[j] += w * row[j];
    }
    for (std::size_t i = 0; i + offset < nh; ++i) {
        const double w = beta_.w[i];
        const double* row = table_.data() + i * n_eps;
        for (std::size_t j = 0; j < n_eps; ++j) cond[j] += w * row[j];
    }
    for (std::size_t j = 0; j < n_eps; ++j) cond[j] /= mass;

    double p_c = 0.0;
    for (std::size_t j = 0; j < n_eps; ++j) {
        const double up = cond[j];
        const double um = cond[n_eps - 1 - j];
        const double s = up + um;
        if (s < 1e-300) continue;
        p_c += eps_.w[j] * (up * up + um * um) / s;
    }
    p_c *= 0.5;
    if (p_c < 0.5 - 1e-9 || p_c > 1.0 + 1e-9) {
        throw AuditFailure("collision_probability: p_c outside [1/2, 1]");
    }
    p_c = std::clamp(p_c, 0.5, 1.0);
    return {p_c, 1.0 + std::log2(p_c)};
}

KeyRateReport JointTable::report(double beta_c) const {
    KeyRateReport rep;
    rep.alpha = scenario_.alpha;
    rep.beta_c_requested = beta_c;
    rep.beta_c = snap_threshold(beta_c);
    rep.beta_c_resolution = snap_resolution(beta_c);
    rep.t_squared = scenario_.bs.t * scenario_.bs.t;
    const Acceptance acc = acceptance(beta_c);
    rep.p0 = acc.p0;
    rep.p1 = acc.p1;
    rep.r_acc = acc.r_acc;
    if (acc.r_acc <= 1e-15) {
        rep.note = "zero-acceptance";
        rep.i_ab = 0.0;
        rep.p_c = 0.5;
        rep.tau = 0.0;
        rep.s_ab = 0.0;
        rep.s_ab_clamped = 0.0;
        return rep;
    }
    rep.i_ab = shannon_info(beta_c);
    const auto [p_c, tau] = collision_probability(beta_c);
    rep.p_c = p_c;
    rep.tau = tau;
    rep.s_ab = rep.r_acc * (rep.i_ab - rep.tau);
    rep.s_ab_clamped = std::max(rep.s_ab, 0.0);
    rep.validate();
    return rep;
}

double JointTable::mean_beta() const {
    double m = 0.0;
    for (std::size_t i = 0; i < beta_.size(); ++i) {
        m += beta_.w[i] * beta_.x[i] * marginal_[i];
    }
    return m / total_mass();
}

double JointTable::mean_eps() const {
    const std::size_t n_eps = eps_.size();
    double m = 0.0;
    for (std::size_t j = 0; j < n_eps; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < beta_.size(); ++i) {
            col += beta_.w[i] * p_plus(i, j);
        }
        m += eps_.w[j] * eps_.x[j] * col;
    }
    return m / total_mass();
}

double JointTable::covariance() const {
    const double mb = mean_beta();
    const double me = mean_eps();
    double cov = 0.0;
    for (std::size_t i = 0; i < beta_.size(); ++i) {
        const double db = beta_.x[i] - mb;
        double row = 0.0;
        for (std::size_t j = 0; j < eps_.size(); ++j) {
            row += eps_.w[j] * (eps_.x[j] - me) * p_plus(i, j);
        }
        cov += beta_.w[i] * db * row;
    }
    return cov / total_mass();
}

Acceptance acceptance(const AttackScenario& scenario, double beta_c,
                      const PipelineGrids& grids) {
    return JointTable(scenario, grids).acceptance(beta_c);
}

double shannon_info(const AttackScenario& scenario, double beta_c,
                    const PipelineGrids& grids) {
    return JointTable(scenario, grids).shannon_info(beta_c);
}

std::pair<double, double> collision_probability(const AttackScenario& scenario,
                                                double beta_c,
                                                const PipelineGrids& grids) {
    return JointTable(scenario, grids).collision_probability(beta_c);
}

KeyRateReport secret_key_rate(const AttackScenario& scenario, double beta_c,
                              const PipelineGrids& grids) {
    return JointTable(scenario, grids).report(beta_c);
}

std::vector<double> Range::values() const {
    if (!(step > 0.0)) throw DomainError("Range: step must be positive");
    if (max < min) throw DomainError("Range: max < min");
    const int n = static_cast<int>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = min + i * step;
    return v;
}

SweepResult sweep_keyrate(StateFamily family, double t_squared,
                          const Range& alpha_range, const Range& beta_c_range,
                          const PipelineGrids& grids, Exec exec) {
    SweepResult result;
    result.family = family;
    result.t_squared = t_squared;
    result.alphas = alpha_range.values();
    result.beta_cs = beta_c_range.values();
    const std::size_t na = result.alphas.size();
    const std::size_t nb = result.beta_cs.size();
    result.reports.resize(na * nb);
    result.s_ab.xs = result.alphas;
    result.s_ab.ys = result.beta_cs;
    result.s_ab.values.assign(na * nb, 0.0);
    for (std::size_t ia = 0; ia < na; ++ia) {
        AttackScenario scenario;
        scenario.family = family;
        scenario.alpha = result.alphas[ia];
        scenario.bs = BeamSplitter::from_transmission(t_squared);
        const JointTable table(scenario, grids, exec);
        for (std::size_t ib = 0; ib < nb; ++ib) {
            KeyRateReport rep = table.report(result.beta_cs[ib]);
            result.s_ab.values[ia * nb + ib] = rep.s_ab;
            result.reports[ia * nb + ib] = std::move(rep);
        }
    }
    result.best = argmax_on_grid(result.s_ab);
    return result;
}

std::vector<DistancePoint> keyrate_vs_distance(
    StateFamily family, const std::vector<double>& distances_km,
    double loss_db_per_km, const Range& alpha_range, const Range& beta_c_range,
    const PipelineGrids& grids, Exec exec) {
    std::vector<DistancePoint> curve;
    curve.reserve(distances_km.size());
    for (const double d : distances_km) {
        ChannelSpec spec;
        spec.loss_db_per_km = loss_db_per_km;
        spec.distance_km = d;
        DistancePoint point;
        point.distance_km = d;
        point.t_squared = transmission_from_distance(spec);
        const SweepResult sweep = sweep_keyrate(family, point.t_squared,
                                                alpha_range, beta_c_range, grids,
                                                exec);
        point.best = sweep.reports[sweep.best.i * sweep.beta_cs.size() + sweep.best.j];
        curve.push_back(std::move(point));
    }
    return curve;
}

}  // namespace cvqkd
