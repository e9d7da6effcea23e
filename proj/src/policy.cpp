#include "lrmdp/policy.hpp"

#include <cmath>

#include "lrmdp/errors.hpp"

namespace lrmdp {

std::vector<Mat> uniform_tables(int levels, int num_states, int num_actions) {
    std::vector<Mat> tables(levels,
                            Mat::Constant(num_states, num_actions, 1.0 / num_actions));
    return tables;
}

std::vector<Mat> one_hot_tables(const std::vector<std::vector<int>>& actions,
                                int num_actions) {
    std::vector<Mat> tables;
    tables.reserve(actions.size());
    for (const auto& level : actions) {
        Mat t = Mat::Zero(static_cast<int>(level.size()), num_actions);
        for (int s = 0; s < static_cast<int>(level.size()); ++s) t(s, level[s]) = 1.0;
        tables.push_back(std::move(t));
    }
    return tables;
}

Policy Policy::tabular(std::vector<Mat> tables) {
    for (const auto& t : tables) {
        for (int s = 0; s < t.rows(); ++s) {
            if (t.row(s).minCoeff() < -1e-12 || std::abs(t.row(s).sum() - 1.0) > 1e-9) {
                throw DimensionMismatch("tabular policy rows must be pmfs");
            }
        }
    }
    Policy p;
    p.kind_ = Kind::Tabular;
    p.tables_ = std::move(tables);
    return p;
}

Policy Policy::uniform(int levels, int num_states, int num_actions) {
    return tabular(uniform_tables(levels, num_states, num_actions));
}

Policy Policy::mixture(std::vector<Policy> components, std::vector<double> weights) {
    if (components.size() != weights.size() || components.empty()) {
        throw DimensionMismatch("mixture components and weights must match and be nonempty");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw DimensionMismatch("mixture weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw DimensionMismatch("mixture weights must sum to 1");
    }
    Policy p;
    p.kind_ = Kind::Mixture;
    p.components_ = std::move(components);
    p.weights_ = std::move(weights);
    return p;
}

Policy Policy::prefix_then_uniform(Policy prefix, int prefix_levels) {
    if (prefix_levels < 0) throw DimensionMismatch("prefix_levels must be nonnegative");
    Policy p;
    p.kind_ = Kind::PrefixThenUniform;
    p.prefix_ = std::make_shared<const Policy>(std::move(prefix));
    p.prefix_levels_ = prefix_levels;
    return p;
}

const std::vector<Mat>& Policy::tables() const {
    if (kind_ != Kind::Tabular) throw DimensionMismatch("policy is not tabular");
    return tables_;
}

const std::vector<Policy>& Policy::components() const {
    if (kind_ != Kind::Mixture) throw DimensionMismatch("policy is not a mixture");
    return components_;
}

const std::vector<double>& Policy::weights() const {
    if (kind_ != Kind::Mixture) throw DimensionMismatch("policy is not a mixture");
    return weights_;
}

const Policy& Policy::prefix() const {
    if (kind_ != Kind::PrefixThenUniform) {
        throw DimensionMismatch("policy is not prefix-then-uniform");
    }
    return *prefix_;
}

int Policy::prefix_levels() const {
    if (kind_ != Kind::PrefixThenUniform) {
        throw DimensionMismatch("policy is not prefix-then-uniform");
    }
    return prefix_levels_;
}

std::vector<std::pair<double, TabularPolicy>> Policy::flatten(int levels, int num_states,
                                                              int num_actions) const {
    std::vector<std::pair<double, TabularPolicy>> out;
    switch (kind_) {
    case Kind::Null: {
        out.emplace_back(1.0, TabularPolicy{uniform_tables(levels, num_states, num_actions)});
        break;
    }
    case Kind::Tabular: {
        if (static_cast<int>(tables_.size()) < levels) {
            throw DimensionMismatch("tabular policy does not cover all levels");
        }
        TabularPolicy t;
        t.tables.assign(tables_.begin(), tables_.begin() + levels);
        out.emplace_back(1.0, std::move(t));
        break;
    }
    case Kind::Mixture: {
        for (std::size_t i = 0; i < components_.size(); ++i) {
            if (weights_[i] == 0.0) continue;
            auto sub = components_[i].flatten(levels, num_states, num_actions);
            for (auto& [w, t] : sub) out.emplace_back(weights_[i] * w, std::move(t));
        }
        break;
    }
    case Kind::PrefixThenUniform: {
        const int head = std::min(prefix_levels_, levels);
        auto sub = head == 0
                       ? std::vector<std::pair<double, TabularPolicy>>{
                             {1.0, TabularPolicy{}}}
                       : prefix_->flatten(head, num_states, num_actions);
        for (auto& [w, t] : sub) {
            for (int h = head; h < levels; ++h) {
                t.tables.push_back(Mat::Constant(num_states, num_actions, 1.0 / num_actions));
            }
            out.emplace_back(w, std::move(t));
        }
        break;
    }
    }
    return out;
}

TabularPolicy Policy::sample_component(Rng& rng, int levels, int num_states,
                                       int num_actions) const {
    switch (kind_) {
    case Kind::Null:
        return TabularPolicy{uniform_tables(levels, num_states, num_actions)};
    case Kind::Tabular: {
        if (static_cast<int>(tables_.size()) < levels) {
            throw DimensionMismatch("tabular policy does not cover all levels");
        }
        TabularPolicy t;
        t.tables.assign(tables_.begin(), tables_.begin() + levels);
        return t;
    }
    case Kind::Mixture: {
        Eigen::Map<const Vec> w(weights_.data(), static_cast<long>(weights_.size()));
        const int i = rng.categorical(w);
        return components_[i].sample_component(rng, levels, num_states, num_actions);
    }
    case Kind::PrefixThenUniform: {
        const int head = std::min(prefix_levels_, levels);
        TabularPolicy t = head == 0 ? TabularPolicy{}
                                    : prefix_->sample_component(rng, head, num_states,
                                                                num_actions);
        for (int h = head; h < levels; ++h) {
            t.tables.push_back(Mat::Constant(num_states, num_actions, 1.0 / num_actions));
        }
        return t;
    }
    }
    throw Error("unreachable policy kind");
}

} // namespace lrmdp
