#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "lrmdp/model.hpp"
#include "lrmdp/rng.hpp"

namespace lrmdp {

/// Per-level action tables; tables[h] is num_states x num_actions with pmf rows.
struct TabularPolicy {
    std::vector<Mat> tables;

    int levels() const { return static_cast<int>(tables.size()); }
    Eigen::VectorXd action_pmf(int h, int s) const { return tables[h].row(s); }
};

std::vector<Mat> uniform_tables(int levels, int num_states, int num_actions);

/// One-hot tables from per-level, per-state action indices.
std::vector<Mat> one_hot_tables(const std::vector<std::vector<int>>& actions, int num_actions);

/**
 * A policy is one of:
 *   - Null: takes no actions (the starting exploratory policy);
 *   - Tabular: per-level state -> action pmf tables;
 *   - Mixture: a component is drawn once per episode and then executed for
 *     the whole episode;
 *   - PrefixThenUniform: a policy executed for the first `prefix_levels`
 *     levels, uniform actions afterwards.
 *
 * Exact evaluation goes through flatten(), which expands the tree into a
 * finite mixture of full-horizon tabular policies. The once-per-episode
 * mixture semantics make this expansion lossless.
 */
class Policy {
public:
    enum class Kind { Null, Tabular, Mixture, PrefixThenUniform };

    Policy() : kind_(Kind::Null) {}

    static Policy null_policy() { return Policy(); }
    static Policy tabular(std::vector<Mat> tables);
    static Policy uniform(int levels, int num_states, int num_actions);
    static Policy mixture(std::vector<Policy> components, std::vector<double> weights);
    static Policy prefix_then_uniform(Policy prefix, int prefix_levels);

    Kind kind() const { return kind_; }

    const std::vector<Mat>& tables() const;
    const std::vector<Policy>& components() const;
    const std::vector<double>& weights() const;
    const Policy& prefix() const;
    int prefix_levels() const;

    /// Expands into weighted full-horizon tabular components. Components must
    /// cover `levels` (PrefixThenUniform fills its own tail with uniform).
    std::vector<std::pair<double, TabularPolicy>> flatten(int levels, int num_states,
                                                          int num_actions) const;

    /// Draws the episode's tabular component (one categorical draw per
    /// mixture node on the sampled path).
    TabularPolicy sample_component(Rng& rng, int levels, int num_states,
                                   int num_actions) const;

private:
    Kind kind_;
    std::vector<Mat> tables_;
    std::vector<Policy> components_;
    std::vector<double> weights_;
    std::shared_ptr<const Policy> prefix_;
    int prefix_levels_ = 0;
};

} // namespace lrmdp
