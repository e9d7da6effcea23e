#include "lrmdp/model.hpp"

#include <cmath>
#include <sstream>

#include "lrmdp/errors.hpp"

namespace lrmdp {

namespace {
constexpr double kPhiNormTol = 1e-9;
constexpr double kRowSumTol = 1e-9;
constexpr double kRowNegTol = 1e-12;
constexpr double kMuNormTol = 1e-6;
constexpr double kLatentTol = 1e-9;
} // namespace

FactoredLevel::FactoredLevel(Mat phi_table, Mat mu_table, int states, int actions)
    : phi(std::move(phi_table)), mu(std::move(mu_table)), num_states(states),
      num_actions(actions), dim(static_cast<int>(mu.cols())) {
    if (phi.rows() != static_cast<long>(states) * actions || phi.cols() != mu.cols() ||
        mu.rows() != states) {
        throw DimensionMismatch("FactoredLevel: table shapes do not match (N, K, d)");
    }
}

LowRankMDP LowRankMDP::prefix(int h) const {
    if (h < 0 || h > horizon) throw DimensionMismatch("prefix: level out of range");
    LowRankMDP out = *this;
    out.horizon = h;
    out.levels.assign(levels.begin(), levels.begin() + h);
    if (!latents.empty()) out.latents.assign(latents.begin(), latents.begin() + h);
    return out;
}

namespace {

/// Max of ||mu^T g||_2 over binary g, exact via Gray-code walk.
double max_mu_norm_exhaustive(const Mat& mu) {
    const int n = static_cast<int>(mu.rows());
    Vec acc = Vec::Zero(mu.cols());
    double best = 0.0;
    std::vector<bool> in_set(n, false);
    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        // Gray code: bit that flips between i-1 and i.
        const int bit = __builtin_ctzll(i);
        if (in_set[bit]) {
            acc -= mu.row(bit);
            in_set[bit] = false;
        } else {
            acc += mu.row(bit);
            in_set[bit] = true;
        }
        best = std::max(best, acc.squaredNorm());
    }
    return std::sqrt(best);
}

double max_mu_norm_sampled(const Mat& mu, int draws) {
    Rng rng(derive_seed(0x6d755f6e6f726dULL, "mu-norm-audit"));
    const int n = static_cast<int>(mu.rows());
    double best = 0.0;
    Vec acc(mu.cols());
    for (int t = 0; t < draws; ++t) {
        acc.setZero();
        for (int x = 0; x < n; ++x) {
            if (rng.uniform() < 0.5) acc += mu.row(x);
        }
        best = std::max(best, acc.squaredNorm());
    }
    return std::sqrt(best);
}

} // namespace

ValidationReport validate_level(const FactoredLevel& level, const LatentRepresentation* latent) {
    ValidationReport rep;
    std::ostringstream detail;

    const int rows = level.num_states * level.num_actions;
    for (int r = 0; r < rows; ++r) {
        const double nrm = level.phi.row(r).norm();
        if (nrm > 1.0 + kPhiNormTol) {
            rep.phi_norms_ok = false;
            detail << "phi row " << r << " norm " << nrm << "; ";
            break;
        }
    }

    for (int r = 0; r < rows && rep.rows_ok; ++r) {
        double sum = 0.0;
        for (int x = 0; x < level.num_states; ++x) {
            const double p = level.phi.row(r).dot(level.mu.row(x));
            if (p < -kRowNegTol) {
                // Entries may be mildly negative before clipping; anything
                // beyond the tolerance means the pair is not a distribution.
                rep.rows_ok = false;
                detail << "row " << r << " entry " << x << " = " << p << "; ";
                break;
            }
            sum += std::max(p, 0.0);
        }
        if (rep.rows_ok && std::abs(sum - 1.0) > kRowSumTol) {
            rep.rows_ok = false;
            detail << "row " << r << " sums to " << sum << "; ";
        }
    }

    const double mu_norm = level.num_states <= 20 ? max_mu_norm_exhaustive(level.mu)
                                                  : max_mu_norm_sampled(level.mu, 10000);
    if (mu_norm > std::sqrt(static_cast<double>(level.dim)) + kMuNormTol) {
        rep.mu_norm_ok = false;
        detail << "mu norm bound " << mu_norm << " > sqrt(" << level.dim << "); ";
    }

    if (latent != nullptr) {
        const auto check_pmf_rows = [&](const Mat& m) {
            for (int r = 0; r < m.rows(); ++r) {
                if (m.row(r).minCoeff() < -kRowNegTol ||
                    std::abs(m.row(r).sum() - 1.0) > kRowSumTol) {
                    return false;
                }
            }
            return true;
        };
        if (!check_pmf_rows(latent->psi) || !check_pmf_rows(latent->nu)) {
            rep.latent_ok = false;
            detail << "latent rows not pmfs; ";
        } else {
            // max |psi nu - T| over all (s, a, x')
            const Mat implied = latent->psi * latent->nu;           // rows x N
            const Mat direct = level.phi * level.mu.transpose();    // rows x N
            const double gap = (implied - direct).cwiseAbs().maxCoeff();
            if (gap > kLatentTol) {
                rep.latent_ok = false;
                detail << "latent consistency gap " << gap << "; ";
            }
        }
    }

    rep.detail = detail.str();
    return rep;
}

ValidationReport validate_model(const LowRankMDP& model) {
    ValidationReport rep;
    if (static_cast<int>(model.levels.size()) != model.horizon) {
        rep.rows_ok = false;
        rep.detail = "levels.size() != horizon";
        return rep;
    }
    if (!model.latents.empty() &&
        static_cast<int>(model.latents.size()) != model.horizon) {
        rep.latent_ok = false;
        rep.detail = "latents present but not one per level";
        return rep;
    }
    for (int h = 0; h < model.horizon; ++h) {
        const auto& lv = model.levels[h];
        if (lv.num_states != model.num_states || lv.num_actions != model.num_actions ||
            lv.dim != model.dim) {
            rep.rows_ok = false;
            rep.detail = "level " + std::to_string(h) + " shape differs from model";
            return rep;
        }
        const LatentRepresentation* lat =
            model.latents.empty() ? nullptr : &model.latents[h];
        ValidationReport r = validate_level(lv, lat);
        rep.phi_norms_ok &= r.phi_norms_ok;
        rep.rows_ok &= r.rows_ok;
        rep.mu_norm_ok &= r.mu_norm_ok;
        rep.latent_ok &= r.latent_ok;
        if (!r.ok()) rep.detail += "level " + std::to_string(h) + ": " + r.detail;
    }
    if (model.start_state < 0 || model.start_state >= model.num_states) {
        rep.rows_ok = false;
        rep.detail += "start_state out of range; ";
    }
    return rep;
}

void require_valid(const LowRankMDP& model) {
    const ValidationReport rep = validate_model(model);
    if (!rep.ok()) throw InvalidModel("model invariants violated: " + rep.detail);
}

} // namespace lrmdp
