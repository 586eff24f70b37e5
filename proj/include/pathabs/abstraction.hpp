// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pathabs/dtmc.hpp"
#include "pathabs/error.hpp"
#include "pathabs/state_set.hpp"

namespace pathabs {

/// The sets that drive the abstraction of a chain over S1.
struct FrontierSets {
    /// States of S1 other than the initial state without a positive
    /// transition from outside S1. Abstraction cuts them off entirely.
    StateSet interior_zero;
    /// S1 minus interior_zero.
    StateSet entries;
    /// States outside S1 with a positive transition from S1.
    StateSet exits;
    /// States of S1 that reach `exits` through S1 with positive probability.
    StateSet reaching;
    /// States of S1 with a positive transition into `exits`.
    StateSet reaching_one_step;

    friend bool operator==(const FrontierSets&, const FrontierSets&) = default;
};

/// (1 - P(U)) Q = 1(U, U1), with U = `rows` and U1 = `cols`.
template <typename Scalar>
struct LinearSystem {
    MatrixX<Scalar> a;
    MatrixX<Scalar> b;
    StateSet rows;
    StateSet cols;
};

/// Backward worklist from `exits`: layer i+1 holds the states of S1 not yet
/// visited with a positive transition into layer i. Returns all visited
/// states minus `exits`.
template <typename Scalar>
StateSet reach_backward(const Dtmc<Scalar>& d, const StateSet& s1, const StateSet& exits) {
    require_states(d, s1);
    require_states(d, exits);
    StateSet visited = exits;
    StateSet layer = exits;
    while (!layer.empty()) {
        StateSet next;
        for (State r : s1) {
            if (visited.contains(r)) continue;
            for (State u : layer) {
                if (d(r, u) > Scalar(0)) {
                    next.insert(r);
                    break;
                }
            }
        }
        visited = set_union(visited, next);
        layer = std::move(next);
    }
    return set_difference(visited, exits);
}

/// States of S1 other than the initial state with no positive transition
/// from outside S1.
template <typename Scalar>
StateSet interior_zero(const Dtmc<Scalar>& d, const StateSet& s1) {
    require_states(d, s1);
    StateSet out;
    for (State s : s1) {
        if (s == d.init()) continue;
        bool entered = false;
        for (State u = 1; u <= d.size() && !entered; ++u) {
            if (!s1.contains(u) && d(u, s) > Scalar(0)) entered = true;
        }
        if (!entered) out.insert(s);
    }
    return out;
}

template <typename Scalar>
FrontierSets frontier(const Dtmc<Scalar>& d, const StateSet& s1) {
    const Scalar zero(0);
    FrontierSets fs;
    fs.interior_zero = interior_zero(d, s1);
    fs.entries = set_difference(s1, fs.interior_zero);
    for (State t = 1; t <= d.size(); ++t) {
        if (s1.contains(t)) continue;
        for (State r : s1) {
            if (d(r, t) > zero) {
                fs.exits.insert(t);
                fs.reaching_one_step.insert(r);
            }
        }
    }
    fs.reaching = reach_backward(d, s1, fs.exits);
    return fs;
}

template <typename Scalar>
LinearSystem<Scalar> build_linear_system(const Dtmc<Scalar>& d, const FrontierSets& fs) {
    const auto u = fs.reaching.indices();
    const auto n = static_cast<Eigen::Index>(u.size());
    const auto m = static_cast<Eigen::Index>(fs.reaching_one_step.size());
    LinearSystem<Scalar> sys;
    sys.a = MatrixX<Scalar>::Identity(n, n) - d.matrix()(u, u);
    sys.b = MatrixX<Scalar>::Zero(n, m);
    Eigen::Index col = 0;
    for (State r : fs.reaching_one_step) {
        sys.b(static_cast<Eigen::Index>(fs.reaching.position(r)), col++) = Scalar(1);
    }
    sys.rows = fs.reaching;
    sys.cols = fs.reaching_one_step;
    return sys;
}

/// Solves A X = B by Gauss-Jordan elimination. Rows are scanned in order and
/// the first row with a nonzero entry in the pivot column is taken; with exact
/// arithmetic no magnitude pivoting is needed.
template <typename Scalar>
MatrixX<Scalar> solve_linear(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "solve_linear: incompatible shapes");
    }
    const Eigen::Index n = a.rows();
    MatrixX<Scalar> aug(n, n + b.cols());
    aug << a, b;
    const Scalar zero(0);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        while (pivot < n && aug(pivot, col) == zero) ++pivot;
        if (pivot == n) throw Error(ErrorKind::SingularMatrix, "solve_linear: matrix is singular");
        if (pivot != col) aug.row(pivot).swap(aug.row(col));
        const Scalar inv = Scalar(1) / aug(col, col);
        aug.row(col) *= inv;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || aug(r, col) == zero) continue;
            const Scalar factor = aug(r, col);
            aug.row(r) -= factor * aug.row(col);
        }
    }
    return aug.rightCols(b.cols());
}

template <typename Scalar>
MatrixX<Scalar> solve_linear(const LinearSystem<Scalar>& sys) {
    return solve_linear(sys.a, sys.b);
}

/// The path abstraction of `d` over `s1`. Paths that enter S1 are replaced
/// by direct transitions from the entry state to the exit state carrying
/// the whole mass of the path set; interior states lose every transition.
/// The state space and the initial state are unchanged, and the result may
/// be substochastic when S1 traps probability.
template <typename Scalar>
Dtmc<Scalar> path_abstract(const Dtmc<Scalar>& d, const StateSet& s1) {
    const FrontierSets fs = frontier(d, s1);
    MatrixX<Scalar> y = MatrixX<Scalar>::Zero(d.size(), d.size());
    for (State s = 1; s <= d.size(); ++s) {
        if (s1.contains(s)) continue;
        for (State t = 1; t <= d.size(); ++t) {
            if (!s1.contains(t) || fs.entries.contains(t)) y(s - 1, t - 1) = d(s, t);
        }
    }

    const StateSet sources = set_intersection(fs.entries, fs.reaching);
    if (!sources.empty() && !fs.exits.empty()) {
        const MatrixX<Scalar> q = solve_linear(build_linear_system(d, fs));
        std::vector<Eigen::Index> source_rows;
        for (State s : sources) {
            source_rows.push_back(static_cast<Eigen::Index>(fs.reaching.position(s)));
        }
        const MatrixX<Scalar> crossing =
            q(source_rows, Eigen::all) * d.matrix()(fs.reaching_one_step.indices(), fs.exits.indices());
        y(sources.indices(), fs.exits.indices()) = crossing;
    }
    return Dtmc<Scalar>(std::move(y), d.init());
}

/// d - (S1, ..., Sn): abstraction over each set in turn.
template <typename Scalar>
Dtmc<Scalar> path_abstract_seq(const Dtmc<Scalar>& d, const std::vector<StateSet>& seq) {
    Dtmc<Scalar> out = d;
    for (const StateSet& s1 : seq) out = path_abstract(out, s1);
    return out;
}

template <typename Scalar>
struct PrunedDtmc {
    Dtmc<Scalar> dtmc;
    /// old state -> new state, for every kept state.
    std::map<State, State> renumbering;
};

/// Drops states other than the initial one whose row and column are all
/// zero, renumbering the survivors in ascending order.
template <typename Scalar>
PrunedDtmc<Scalar> prune_isolated(const Dtmc<Scalar>& d) {
    StateSet kept;
    for (State s = 1; s <= d.size(); ++s) {
        const auto i = static_cast<Eigen::Index>(s) - 1;
        const bool isolated = s != d.init() && (d.matrix().row(i).array() == Scalar(0)).all() &&
                              (d.matrix().col(i).array() == Scalar(0)).all();
        if (!isolated) kept.insert(s);
    }
    std::map<State, State> renumbering;
    State next = 1;
    for (State s : kept) renumbering.emplace(s, next++);
    const auto idx = kept.indices();
    MatrixX<Scalar> m = d.matrix()(idx, idx);
    return {Dtmc<Scalar>(std::move(m), renumbering.at(d.init())), std::move(renumbering)};
}

}  // namespace pathabs
