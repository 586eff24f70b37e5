// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "pathabs/pathabs.hpp"

namespace pathabs::testing {

using Rng = std::mt19937_64;

inline Rational q(long num, long den = 1) { return Rational(num) / Rational(den); }

/// The eight-state running example, initial state 1.
inline Dtmc<Rational> m_e() {
    MatrixX<Rational> p = MatrixX<Rational>::Zero(8, 8);
    auto set = [&](State s, State t, Rational v) { p(s - 1, t - 1) = std::move(v); };
    set(1, 2, q(5, 6));
    set(1, 3, q(1, 6));
    set(2, 3, q(2, 3));
    set(2, 5, q(1, 3));
    set(3, 4, q(1));
    set(4, 3, q(3, 4));
    set(4, 7, q(1, 6));
    set(4, 8, q(1, 12));
    set(5, 6, q(1));
    set(6, 2, q(1, 4));
    set(6, 5, q(1, 2));
    set(6, 8, q(1, 4));
    set(7, 7, q(1));
    set(8, 8, q(1));
    return Dtmc<Rational>(std::move(p), 1);
}

/// Latin letters as states: a = 1, ..., z = 26.
inline Word latin(std::string_view text) {
    Word out;
    for (char c : text) out.push_back(static_cast<State>(c - 'a' + 1));
    return out;
}

inline StateSet latin_set(std::string_view letters) {
    StateSet out;
    for (char c : letters) out.insert(static_cast<State>(c - 'a' + 1));
    return out;
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline StateSet random_subset(Rng& rng, const StateSet& universe, double p = 0.5) {
    StateSet out;
    for (State s : universe) {
        if (coin(rng, p)) out.insert(s);
    }
    return out;
}

inline Word random_word(Rng& rng, std::size_t alphabet, std::size_t min_len, std::size_t max_len) {
    Word out(uniform(rng, min_len, max_len));
    for (State& s : out) s = uniform(rng, 1, alphabet);
    return out;
}

/// Writes weights `w` over `targets` into row `s`, scaled to total `mass`.
inline void fill_row(MatrixX<Rational>& p, State s, const std::vector<State>& targets,
                     const std::vector<long>& w, const Rational& mass) {
    long total = 0;
    for (long x : w) total += x;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        p(s - 1, targets[i] - 1) += mass * q(w[i], total);
    }
}

struct RandomOptions {
    std::size_t min_states = 4;
    std::size_t max_states = 10;
    double absorbing = 0.25;      // chance that a state is absorbing
    double substochastic = 0.0;   // chance that a row leaks mass
    std::size_t max_out = 4;      // successors per non-absorbing row
};

/// Random chain with integer weights 1..9 normalized per row.
inline Dtmc<Rational> random_dtmc(Rng& rng, const RandomOptions& opt = {}) {
    const std::size_t n = uniform(rng, opt.min_states, opt.max_states);
    MatrixX<Rational> p = MatrixX<Rational>::Zero(n, n);
    for (State s = 1; s <= n; ++s) {
        if (coin(rng, opt.absorbing)) {
            p(s - 1, s - 1) = 1;
            continue;
        }
        std::vector<State> targets;
        std::vector<long> w;
        const std::size_t k = uniform(rng, 1, std::min(n, opt.max_out));
        while (targets.size() < k) {
            const State t = uniform(rng, 1, n);
            if (std::find(targets.begin(), targets.end(), t) != targets.end()) continue;
            if (k == 1 && t == s && n > 1) continue;
            targets.push_back(t);
            w.push_back(static_cast<long>(uniform(rng, 1, 9)));
        }
        const Rational mass = coin(rng, opt.substochastic) ? q(static_cast<long>(uniform(rng, 1, 5)), 6) : q(1);
        fill_row(p, s, targets, w, mass);
    }
    return Dtmc<Rational>(std::move(p), uniform(rng, 1, n));
}

/// Random chain in which every state of `s1` keeps at most half of its mass
/// inside `s1` and sends the rest outside. With `acyclic`, edges inside `s1`
/// only go from a smaller to a larger state. States outside `s1` are
/// absorbing when `absorbing_outside`, otherwise random.
inline Dtmc<Rational> random_mixing_dtmc(Rng& rng, std::size_t n, const StateSet& s1, bool acyclic,
                                         bool absorbing_outside) {
    MatrixX<Rational> p = MatrixX<Rational>::Zero(n, n);
    const StateSet all = StateSet::range(1, n);
    const StateSet outside = set_difference(all, s1);
    for (State s = 1; s <= n; ++s) {
        if (!s1.contains(s)) {
            if (absorbing_outside) {
                p(s - 1, s - 1) = 1;
                continue;
            }
            std::vector<State> targets;
            std::vector<long> w;
            for (State t : all) {
                if (coin(rng, 0.4)) {
                    targets.push_back(t);
                    w.push_back(static_cast<long>(uniform(rng, 1, 9)));
                }
            }
            if (targets.empty() || (targets.size() == 1 && targets[0] == s)) {
                p(s - 1, s - 1) = 1;
            } else {
                fill_row(p, s, targets, w, q(1));
            }
            continue;
        }
        std::vector<State> in_targets;
        std::vector<long> in_w;
        for (State t : s1) {
            if (acyclic && t <= s) continue;
            if (coin(rng, 0.5)) {
                in_targets.push_back(t);
                in_w.push_back(static_cast<long>(uniform(rng, 1, 9)));
            }
        }
        std::vector<State> out_targets;
        std::vector<long> out_w;
        for (State t : outside) {
            if (out_targets.empty() || coin(rng, 0.4)) {
                out_targets.push_back(t);
                out_w.push_back(static_cast<long>(uniform(rng, 1, 9)));
            }
        }
        long in_total = 0;
        long out_total = 0;
        for (long x : in_w) in_total += x;
        for (long x : out_w) out_total += x;
        if (out_total < in_total) out_w[0] += in_total - out_total;
        out_total = std::max(out_total, in_total);
        const Rational total(in_total + out_total);
        for (std::size_t i = 0; i < in_targets.size(); ++i) p(s - 1, in_targets[i] - 1) += Rational(in_w[i]) / total;
        for (std::size_t i = 0; i < out_targets.size(); ++i) p(s - 1, out_targets[i] - 1) += Rational(out_w[i]) / total;
    }
    return Dtmc<Rational>(std::move(p), uniform(rng, 1, n));
}

/// Rows of P restricted to `set`, all other entries zero.
inline MatrixX<Rational> restricted(const Dtmc<Rational>& d, const StateSet& set) {
    MatrixX<Rational> out = MatrixX<Rational>::Zero(d.size(), d.size());
    for (State s : set) {
        for (State t : set) out(s - 1, t - 1) = d(s, t);
    }
    return out;
}

inline Rational row_sum(const Dtmc<Rational>& d, State s) {
    Rational total(0);
    for (State t = 1; t <= d.size(); ++t) total += d(s, t);
    return total;
}

}  // namespace pathabs::testing
