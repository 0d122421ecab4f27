#pragma once

#include "qkz/ratfunc.hpp"
#include "qkz/tensor.hpp"
#include "qkz/vars.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qkz {

// Values of the variable groups an identity depends on. lev[0] holds the
// rapidities beta, lev[1] the alphas, lev[k] (k >= 2) the gamma_{k,*}.
template <class T>
struct Point {
    std::vector<std::vector<T>> lev;
    T h;

    const std::vector<T>& beta() const { return lev.at(0); }
    const std::vector<T>& alpha() const { return lev.at(1); }
};

inline int level_var(int k, int j)
{
    if (k == 0) return var_beta(j);
    if (k == 1) return var_alpha(j);
    return var_gamma(k, j);
}

inline Point<QRat> symbolic_point(const std::vector<int>& sizes)
{
    Point<QRat> p;
    for (size_t k = 0; k < sizes.size(); ++k) {
        p.lev.emplace_back();
        for (int j = 1; j <= sizes[k]; ++j) p.lev.back().push_back(qvar(level_var(int(k), j)));
    }
    p.h = qvar(var_hbar());
    return p;
}

inline Point<Rat> random_point(const std::vector<int>& sizes, std::mt19937_64& rng, const EqConfig& cfg)
{
    std::uniform_int_distribution<long> d(cfg.lo, cfg.hi);
    Point<Rat> p;
    for (int s : sizes) {
        p.lev.emplace_back();
        for (int j = 0; j < s; ++j) p.lev.back().push_back(Rat(d(rng)));
    }
    p.h = Rat(d(rng));
    return p;
}

inline bool same(const QRat& a, const QRat& b) { return (a - b).is_zero(); }
inline bool same(const Rat& a, const Rat& b) { return a == b; }
template <class T>
bool same(const TensorVector<T>& a, const TensorVector<T>& b)
{
    return (a - b).is_zero();
}

// Tests lhs == rhs for f(point) -> {lhs, rhs}. Deterministic mode evaluates
// once over QRat symbols; probabilistic mode compares exact rationals at
// seeded random integer points, resampling on pole hits.
template <class F>
bool holds(F&& f, const std::vector<int>& sizes, const EqConfig& cfg, std::string* why = nullptr)
{
    if (cfg.mode == EqMode::Deterministic) {
        auto p = symbolic_point(sizes);
        auto [l, r] = f(p);
        if (same(l, r)) return true;
        if (why) *why = "symbolic mismatch";
        return false;
    }
    std::mt19937_64 rng(cfg.seed);
    int done = 0, misses = 0;
    while (done < cfg.trials) {
        auto p = random_point(sizes, rng, cfg);
        try {
            auto [l, r] = f(p);
            if (!same(l, r)) {
                if (why) *why = "mismatch at sample " + std::to_string(done);
                return false;
            }
            ++done;
        } catch (const PoleHit&) {
            if (++misses > 64) throw AlgebraError("sampling failed to avoid poles");
        }
    }
    return true;
}

}  // namespace qkz
