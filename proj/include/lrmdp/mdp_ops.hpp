#pragma once

#include <optional>
#include <vector>

#include "lrmdp/model.hpp"
#include "lrmdp/policy.hpp"
#include "lrmdp/rng.hpp"

namespace lrmdp {

/// One episode. Latents, when recorded, hold z_{h+1} at index h (the latent
/// that generated state x_{h+1}).
struct Trajectory {
    std::vector<int> states;  // x_0 .. x_H
    std::vector<int> actions; // a_0 .. a_{H-1}
    std::vector<int> latents; // z_1 .. z_H, empty unless sampled through psi/nu
};

/// Clip-renormalized pmf of <phi(s,a), mu(.)> for raw candidate tables.
/// Throws InvalidModel when the clipped row sums below 1e-6.
Vec row_pmf(const Mat& phi, const Mat& mu, int num_actions, int s, int a);

/// Transition law T_h(. | s, a) of the model (clipped and renormalized).
Vec transition_pmf(const LowRankMDP& model, int h, int s, int a);

/// All rows of level h as a (num_states * num_actions) x num_states matrix.
Mat transition_table(const LowRankMDP& model, int h);
std::vector<Mat> transition_tables(const LowRankMDP& model);

/// Draws x' ~ T_h(. | s, a).
int sample_transition(const LowRankMDP& model, int h, int s, int a, Rng& rng);

/// Draws x' from a raw candidate pair (the sampling oracle's contract).
int sample_from_pair(const Mat& phi, const Mat& mu, int num_actions, int s, int a, Rng& rng);

/// Executes the policy for a full episode. With `with_latents`, transitions
/// are generated as z ~ psi(x, a), x' ~ nu(z) and the latent path recorded;
/// requires latent representations on every level.
Trajectory rollout(const LowRankMDP& model, const Policy& policy, Rng& rng,
                   bool with_latents = false);

/// Total variation distance between two distributions of equal length.
double tv_distance(const Vec& p, const Vec& q);

/// Exact joint distribution over (state, action) at level h under the policy
/// (mixtures weighted by component, component fixed per episode).
Mat occupancy(const LowRankMDP& model, const Policy& policy, int h);

/// Exact state distribution at level h (before acting).
Vec state_marginal(const LowRankMDP& model, const Policy& policy, int h);

/// Expected total reward of the policy; rewards are per-level (s, a) tables.
double policy_value(const LowRankMDP& model, const Policy& policy,
                    const std::vector<Mat>& rewards);

struct DpResult {
    TabularPolicy policy;   // deterministic, one-hot rows
    double value = 0.0;     // optimal value from the start state
    std::vector<Vec> values; // V_h per level, size horizon + 1
};

/**
 * Exactly optimal deterministic policy for a per-level reward table in
 * [0, 1], by backward dynamic programming on the known model. Ties between
 * actions break toward the lowest index.
 */
DpResult best_policy_for_reward(const LowRankMDP& model, const std::vector<Mat>& rewards);

/// Zero rewards everywhere except `table` at the last level of the model.
std::vector<Mat> terminal_reward(const LowRankMDP& model, const Mat& table);

/// theta = sum_x' mu_h(x') V(x'), the vector representing the one-step
/// backup of V as a linear function of phi_h.
Vec bellman_backup_theta(const LowRankMDP& model, int h, const Vec& v);

// Table-level variants used by iterative planners to avoid re-deriving the
// clipped rows each round. `tables[h]` is the (N*K) x N law of level h.
DpResult dp_on_tables(const std::vector<Mat>& tables, int num_states, int num_actions,
                      int start_state, const std::vector<Mat>& rewards);
Mat occupancy_on_tables(const std::vector<Mat>& tables, int num_states, int num_actions,
                        int start_state, const TabularPolicy& policy, int h);

} // namespace lrmdp
