#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lrmdp/rng.hpp"

namespace lrmdp {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/**
 * One time step of a factored transition operator.
 *
 * The transition law is T(x' | s, a) = <phi(s, a), mu(x')>. Tables are stored
 * dense: phi has one row per (state, action) pair in row-major order
 * (row = s * num_actions + a) and mu has one row per successor state.
 *
 * A level is well formed when every phi row has Euclidean norm at most one,
 * every (s, a) row of the induced operator is a probability vector after
 * clipping negatives at zero, and sum_x' mu(x') g(x') has norm at most
 * sqrt(d) for every g with values in [0, 1].
 */
struct FactoredLevel {
    Mat phi; // (num_states * num_actions) x dim
    Mat mu;  // num_states x dim
    int num_states = 0;
    int num_actions = 0;
    int dim = 0;

    FactoredLevel() = default;
    FactoredLevel(Mat phi_table, Mat mu_table, int states, int actions);

    Eigen::VectorXd phi_row(int s, int a) const { return phi.row(s * num_actions + a); }
};

/**
 * Simplex features (psi, nu) over a finite latent alphabet, consistent with a
 * FactoredLevel: T(x'|s,a) = sum_z psi(s,a)[z] nu(z)[x'].
 */
struct LatentRepresentation {
    Mat psi; // (num_states * num_actions) x Z, rows are pmfs over latents
    Mat nu;  // Z x num_states, rows are pmfs over successor states
    int num_latents = 0;

    Eigen::VectorXd psi_row(int s, int a, int num_actions) const {
        return psi.row(s * num_actions + a);
    }
};

/**
 * Horizon-H non-stationary low rank MDP over finite index spaces.
 *
 * Doubles as the environment and as a learned model. Level 0 is rooted: the
 * occupancy at h = 0 is a point mass on start_state. The optional latent
 * representations make the latent trajectory observable for analysis.
 */
struct LowRankMDP {
    int horizon = 0;
    int num_states = 0;
    int num_actions = 0;
    int dim = 0;
    int start_state = 0;
    std::vector<FactoredLevel> levels;
    std::vector<LatentRepresentation> latents; // empty or one per level

    bool has_latents() const { return !latents.empty(); }

    /// Model restricted to the first `h` levels (planning prefix).
    LowRankMDP prefix(int h) const;
};

/// Per-field outcome of the invariant audit.
struct ValidationReport {
    bool phi_norms_ok = true;   // ||phi(s,a)||_2 <= 1 + 1e-9
    bool rows_ok = true;        // clipped rows are pmfs, raw sums within 1e-9 of 1
    bool mu_norm_ok = true;     // ||sum_x mu(x) g(x)|| <= sqrt(d) + 1e-6 over binary g
    bool latent_ok = true;      // psi/nu rows are pmfs and reproduce the level
    std::string detail;

    bool ok() const { return phi_norms_ok && rows_ok && mu_norm_ok && latent_ok; }
};

/**
 * Audits the level invariants.
 *
 * The mu-normalization quantifies over all g: X -> [0,1]; the maximum of the
 * convex map g -> ||sum mu(x) g(x)||^2 over the box is attained at a vertex,
 * so binary g suffice. They are enumerated exhaustively (Gray code) when
 * num_states <= 20 and sampled (10^4 draws) otherwise.
 */
ValidationReport validate_level(const FactoredLevel& level,
                                const LatentRepresentation* latent = nullptr);

/// Audits every level plus the shape invariants; throws nothing.
ValidationReport validate_model(const LowRankMDP& model);

/// Throws InvalidModel when the audit fails.
void require_valid(const LowRankMDP& model);

} // namespace lrmdp
