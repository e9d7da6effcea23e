#include "lrmdp/rng.hpp"

#include <cassert>
#include <cmath>

namespace lrmdp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view label) {
    return splitmix64(splitmix64(master) ^ fnv1a(label));
}

double Rng::uniform() {
    // 53 high bits -> [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

int Rng::uniform_int(int n) {
    assert(n > 0);
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return static_cast<int>(x % un);
}

int Rng::categorical(const Eigen::VectorXd& weights) {
    const double total = weights.sum();
    assert(total > 0.0);
    double u = uniform() * total;
    for (int i = 0; i < weights.size(); ++i) {
        u -= weights[i];
        if (u < 0.0) return i;
    }
    return static_cast<int>(weights.size()) - 1;
}

double Rng::gaussian() {
    if (have_cached_gaussian_) {
        have_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_gaussian_ = r * std::sin(a);
    have_cached_gaussian_ = true;
    return r * std::cos(a);
}

Eigen::VectorXd Rng::simplex_point(int k) {
    // i.i.d. exponentials normalized to sum one (flat Dirichlet).
    Eigen::VectorXd v(k);
    for (int i = 0; i < k; ++i) {
        double u = uniform();
        while (u <= 0.0) u = uniform();
        v[i] = -std::log(u);
    }
    return v / v.sum();
}

std::vector<int> Rng::permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
        std::swap(p[i], p[uniform_int(i + 1)]);
    }
    return p;
}

} // namespace lrmdp
