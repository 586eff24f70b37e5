// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pathabs/error.hpp"
#include "pathabs/rational.hpp"
#include "pathabs/state_set.hpp"

namespace pathabs {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// A (sub)stochastic discrete-time Markov chain over states 1..n with an
/// initial state. The one-step matrix is stored 0-based; every accessor on
/// this class takes 1-based states.
///
/// Construction only checks the shape and the initial state. Entry and
/// row-sum constraints are checked by `validate`, since several callers need
/// to build a chain first and ask what is wrong with it afterwards.
template <typename Scalar = Rational>
class Dtmc {
   public:
    using Matrix = MatrixX<Scalar>;

    Dtmc(Matrix matrix, State init) : matrix_(std::move(matrix)), init_(init) {
        if (matrix_.rows() != matrix_.cols()) {
            throw Error(ErrorKind::DimensionMismatch, "transition matrix must be square");
        }
        if (init_ < 1 || init_ > size()) {
            throw Error(ErrorKind::InitOutOfRange, "initial state " + std::to_string(init_) + " out of range");
        }
    }

    /// All-zero chain with n states.
    static Dtmc zero(std::size_t n, State init) { return Dtmc(Matrix::Zero(n, n), init); }

    std::size_t size() const { return static_cast<std::size_t>(matrix_.rows()); }
    State init() const { return init_; }
    const Matrix& matrix() const { return matrix_; }

    const Scalar& operator()(State s, State t) const { return matrix_(index(s), index(t)); }

    bool contains(State s) const { return s >= 1 && s <= size(); }

    StateSet states() const { return StateSet::range(1, size()); }

    friend bool operator==(const Dtmc& a, const Dtmc& b) {
        return a.init_ == b.init_ && a.matrix_.rows() == b.matrix_.rows() && a.matrix_ == b.matrix_;
    }

   private:
    static Eigen::Index index(State s) { return static_cast<Eigen::Index>(s) - 1; }

    Matrix matrix_;
    State init_;
};

/// Throws StateOutOfRange unless every member of `set` is a state of `d`.
template <typename Scalar>
void require_states(const Dtmc<Scalar>& d, const StateSet& set) {
    if (!set.empty() && (set.front() < 1 || set.back() > d.size())) {
        throw Error(ErrorKind::StateOutOfRange, "state set " + to_string(set) + " exceeds 1.." + std::to_string(d.size()));
    }
}

template <typename Scalar>
void require_state(const Dtmc<Scalar>& d, State s) {
    if (!d.contains(s)) {
        throw Error(ErrorKind::StateOutOfRange, "state " + std::to_string(s) + " out of range 1.." + std::to_string(d.size()));
    }
}

struct ValidationReport {
    bool is_stochastic = false;
};

template <typename Scalar>
ValidationReport validate(const Dtmc<Scalar>& d) {
    const Scalar zero(0);
    const Scalar one(1);
    ValidationReport report{true};
    for (State s = 1; s <= d.size(); ++s) {
        Scalar row_sum(0);
        for (State t = 1; t <= d.size(); ++t) {
            const Scalar& p = d(s, t);
            if (p < zero) {
                throw Error(ErrorKind::NegativeEntry,
                            "negative entry at (" + std::to_string(s) + "," + std::to_string(t) + ")");
            }
            if (p > one) {
                throw Error(ErrorKind::EntryExceedsOne,
                            "entry exceeds 1 at (" + std::to_string(s) + "," + std::to_string(t) + ")");
            }
            row_sum += p;
        }
        if (row_sum > one) {
            throw Error(ErrorKind::RowSumExceedsOne, "row " + std::to_string(s) + " sums to more than 1");
        }
        if (row_sum != one) report.is_stochastic = false;
    }
    return report;
}

/// K = {s | P(s,s) < 1}.
template <typename Scalar>
StateSet non_absorbing(const Dtmc<Scalar>& d) {
    StateSet out;
    for (State s = 1; s <= d.size(); ++s) {
        if (d(s, s) < Scalar(1)) out.insert(s);
    }
    return out;
}

template <typename Scalar>
bool is_absorbing(const Dtmc<Scalar>& d, State s) {
    return d(s, s) == Scalar(1);
}

using Edge = std::pair<State, State>;

/// Positive-probability transitions, sorted by (src, dst).
template <typename Scalar>
std::vector<Edge> support_edges(const Dtmc<Scalar>& d) {
    std::vector<Edge> out;
    for (State s = 1; s <= d.size(); ++s) {
        for (State t = 1; t <= d.size(); ++t) {
            if (d(s, t) > Scalar(0)) out.emplace_back(s, t);
        }
    }
    return out;
}

template <typename Scalar>
std::size_t transition_count(const Dtmc<Scalar>& d) {
    std::size_t n = 0;
    for (Eigen::Index i = 0; i < d.matrix().size(); ++i) {
        if (d.matrix().data()[i] > Scalar(0)) ++n;
    }
    return n;
}

/// Successors of `s` with positive probability, ascending.
template <typename Scalar>
std::vector<State> successors(const Dtmc<Scalar>& d, State s) {
    std::vector<State> out;
    for (State t = 1; t <= d.size(); ++t) {
        if (d(s, t) > Scalar(0)) out.push_back(t);
    }
    return out;
}

}  // namespace pathabs
