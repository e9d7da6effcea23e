#include "lrmdp/mdp_ops.hpp"

#include <cmath>

#include "lrmdp/errors.hpp"

namespace lrmdp {

namespace {
constexpr double kMinRowMass = 1e-6;

void check_level_index(const LowRankMDP& model, int h) {
    if (h < 0 || h >= model.horizon) throw DimensionMismatch("level index out of range");
}

void check_state_action(int num_states, int num_actions, int s, int a) {
    if (s < 0 || s >= num_states || a < 0 || a >= num_actions) {
        throw DimensionMismatch("state or action index out of range");
    }
}
} // namespace

Vec row_pmf(const Mat& phi, const Mat& mu, int num_actions, int s, int a) {
    const int num_states = static_cast<int>(mu.rows());
    check_state_action(num_states, num_actions, s, a);
    Vec raw = mu * phi.row(s * num_actions + a).transpose();
    Vec clipped = raw.cwiseMax(0.0);
    const double sum = clipped.sum();
    if (sum < kMinRowMass) {
        throw InvalidModel("transition row has no probability mass after clipping");
    }
    return clipped / sum;
}

Vec transition_pmf(const LowRankMDP& model, int h, int s, int a) {
    check_level_index(model, h);
    return row_pmf(model.levels[h].phi, model.levels[h].mu, model.num_actions, s, a);
}

Mat transition_table(const LowRankMDP& model, int h) {
    check_level_index(model, h);
    const int rows = model.num_states * model.num_actions;
    Mat table(rows, model.num_states);
    for (int s = 0; s < model.num_states; ++s) {
        for (int a = 0; a < model.num_actions; ++a) {
            table.row(s * model.num_actions + a) = transition_pmf(model, h, s, a);
        }
    }
    return table;
}

std::vector<Mat> transition_tables(const LowRankMDP& model) {
    std::vector<Mat> tables;
    tables.reserve(model.horizon);
    for (int h = 0; h < model.horizon; ++h) tables.push_back(transition_table(model, h));
    return tables;
}

int sample_transition(const LowRankMDP& model, int h, int s, int a, Rng& rng) {
    return rng.categorical(transition_pmf(model, h, s, a));
}

int sample_from_pair(const Mat& phi, const Mat& mu, int num_actions, int s, int a,
                     Rng& rng) {
    return rng.categorical(row_pmf(phi, mu, num_actions, s, a));
}

Trajectory rollout(const LowRankMDP& model, const Policy& policy, Rng& rng,
                   bool with_latents) {
    if (with_latents && static_cast<int>(model.latents.size()) != model.horizon) {
        throw MissingLatentRep("rollout with latents requires a representation per level");
    }
    const TabularPolicy component =
        policy.sample_component(rng, model.horizon, model.num_states, model.num_actions);

    Trajectory traj;
    traj.states.reserve(model.horizon + 1);
    traj.actions.reserve(model.horizon);
    int x = model.start_state;
    traj.states.push_back(x);
    for (int h = 0; h < model.horizon; ++h) {
        const int a = rng.categorical(component.action_pmf(h, x));
        traj.actions.push_back(a);
        if (with_latents) {
            const auto& rep = model.latents[h];
            const int z = rng.categorical(rep.psi_row(x, a, model.num_actions));
            traj.latents.push_back(z);
            x = rng.categorical(rep.nu.row(z));
        } else {
            x = sample_transition(model, h, x, a, rng);
        }
        traj.states.push_back(x);
    }
    return traj;
}

double tv_distance(const Vec& p, const Vec& q) {
    if (p.size() != q.size()) throw DimensionMismatch("tv_distance length mismatch");
    return 0.5 * (p - q).cwiseAbs().sum();
}

Mat occupancy_on_tables(const std::vector<Mat>& tables, int num_states, int num_actions,
                        int start_state, const TabularPolicy& policy, int h) {
    Vec state_dist = Vec::Zero(num_states);
    state_dist[start_state] = 1.0;
    for (int l = 0; l < h; ++l) {
        Vec next = Vec::Zero(num_states);
        for (int s = 0; s < num_states; ++s) {
            if (state_dist[s] == 0.0) continue;
            for (int a = 0; a < num_actions; ++a) {
                const double mass = state_dist[s] * policy.tables[l](s, a);
                if (mass == 0.0) continue;
                next += mass * tables[l].row(s * num_actions + a).transpose();
            }
        }
        state_dist = next;
    }
    Mat joint(num_states, num_actions);
    for (int s = 0; s < num_states; ++s) {
        joint.row(s) = state_dist[s] * policy.tables[h].row(s);
    }
    return joint;
}

Mat occupancy(const LowRankMDP& model, const Policy& policy, int h) {
    check_level_index(model, h);
    const auto tables = transition_tables(model);
    Mat joint = Mat::Zero(model.num_states, model.num_actions);
    for (const auto& [w, component] :
         policy.flatten(model.horizon, model.num_states, model.num_actions)) {
        joint += w * occupancy_on_tables(tables, model.num_states, model.num_actions,
                                         model.start_state, component, h);
    }
    return joint;
}

Vec state_marginal(const LowRankMDP& model, const Policy& policy, int h) {
    return occupancy(model, policy, h).rowwise().sum();
}

double policy_value(const LowRankMDP& model, const Policy& policy,
                    const std::vector<Mat>& rewards) {
    if (static_cast<int>(rewards.size()) != model.horizon) {
        throw DimensionMismatch("one reward table per level required");
    }
    const auto tables = transition_tables(model);
    double value = 0.0;
    for (const auto& [w, component] :
         policy.flatten(model.horizon, model.num_states, model.num_actions)) {
        for (int h = 0; h < model.horizon; ++h) {
            const Mat occ = occupancy_on_tables(tables, model.num_states,
                                                model.num_actions, model.start_state,
                                                component, h);
            value += w * occ.cwiseProduct(rewards[h]).sum();
        }
    }
    return value;
}

DpResult dp_on_tables(const std::vector<Mat>& tables, int num_states, int num_actions,
                      int start_state, const std::vector<Mat>& rewards) {
    const int horizon = static_cast<int>(tables.size());
    if (static_cast<int>(rewards.size()) != horizon) {
        throw DimensionMismatch("one reward table per level required");
    }
    DpResult result;
    result.values.assign(horizon + 1, Vec::Zero(num_states));
    std::vector<std::vector<int>> greedy(horizon, std::vector<int>(num_states, 0));
    for (int h = horizon - 1; h >= 0; --h) {
        Vec v = Vec::Zero(num_states);
        for (int s = 0; s < num_states; ++s) {
            double best = -std::numeric_limits<double>::infinity();
            int best_a = 0;
            for (int a = 0; a < num_actions; ++a) {
                const double q =
                    rewards[h](s, a) +
                    tables[h].row(s * num_actions + a).dot(result.values[h + 1]);
                if (q > best) { // strict: ties keep the lowest action index
                    best = q;
                    best_a = a;
                }
            }
            v[s] = best;
            greedy[h][s] = best_a;
        }
        result.values[h] = v;
    }
    result.policy.tables = one_hot_tables(greedy, num_actions);
    result.value = result.values[0][start_state];
    return result;
}

DpResult best_policy_for_reward(const LowRankMDP& model, const std::vector<Mat>& rewards) {
    return dp_on_tables(transition_tables(model), model.num_states, model.num_actions,
                        model.start_state, rewards);
}

std::vector<Mat> terminal_reward(const LowRankMDP& model, const Mat& table) {
    std::vector<Mat> rewards(model.horizon,
                             Mat::Zero(model.num_states, model.num_actions));
    if (model.horizon > 0) rewards.back() = table;
    return rewards;
}

Vec bellman_backup_theta(const LowRankMDP& model, int h, const Vec& v) {
    check_level_index(model, h);
    if (v.size() != model.num_states) throw DimensionMismatch("value table size mismatch");
    return model.levels[h].mu.transpose() * v;
}

} // namespace lrmdp
