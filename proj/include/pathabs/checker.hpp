// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "pathabs/abstraction.hpp"
#include "pathabs/dtmc.hpp"
#include "pathabs/error.hpp"
#include "pathabs/scc.hpp"
#include "pathabs/state_set.hpp"
#include "pathabs/words.hpp"

namespace pathabs {

enum class Method { Direct, Scc, Recursive };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

template <typename Scalar>
struct CheckResult {
    /// P(reach g) from the initial state, per goal.
    std::map<State, Scalar> per_goal;
    Scalar total{0};
};

/// Applies `abstract_recursive` to every nontrivial component of `k` and then
/// abstracts over `k`. Components without an entry state (their interior is
/// the whole component) cannot be reached from the initial state; they are
/// left to the final abstraction over `k`.
template <typename Scalar>
Dtmc<Scalar> abstract_via_recursion(const Dtmc<Scalar>& d, const StateSet& k) {
    Dtmc<Scalar> current = d;
    for (const StateSet& u : nontrivial_sccs(d, k)) {
        if (interior_zero(current, u) == u) continue;
        current = abstract_recursive(current, u);
    }
    return path_abstract(current, k);
}

/// d - K for K = non_absorbing(d), computed with the chosen strategy.
template <typename Scalar>
Dtmc<Scalar> abstract_non_absorbing(const Dtmc<Scalar>& d, Method method) {
    const StateSet k = non_absorbing(d);
    switch (method) {
        case Method::Direct: return path_abstract(d, k);
        case Method::Scc: return abstract_via_sccs(d, k);
        case Method::Recursive: return abstract_via_recursion(d, k);
    }
    return path_abstract(d, k);
}

/// Reachability probabilities of absorbing goal states from the initial
/// state, read off d - K.
template <typename Scalar>
CheckResult<Scalar> model_check(const Dtmc<Scalar>& d, const StateSet& goals, Method method = Method::Direct) {
    require_states(d, goals);
    for (State g : goals) {
        if (!is_absorbing(d, g)) {
            throw Error(ErrorKind::GoalNotAbsorbing, "goal state " + std::to_string(g) + " is not absorbing");
        }
    }
    if (goals.contains(d.init())) throw Error(ErrorKind::InitIsGoal, "the initial state is a goal state");

    const Dtmc<Scalar> reduced = abstract_non_absorbing(d, method);
    CheckResult<Scalar> result;
    for (State g : goals) {
        const Scalar& p = reduced(d.init(), g);
        result.per_goal.emplace(g, p);
        result.total += p;
    }
    return result;
}

template <typename Scalar>
struct Witness {
    Word path;  // empty when no path exists
    Scalar prob{0};
};

namespace detail {

template <typename Scalar>
struct Candidate {
    Scalar prob;
    State state;
    // Max-heap on probability; ties go to the smaller state.
    friend bool operator<(const Candidate& a, const Candidate& b) {
        return a.prob < b.prob || (a.prob == b.prob && a.state > b.state);
    }
};

}  // namespace detail

/// Most probable path from `from` to `to` whose inner letters all lie in
/// `allowed`, or anywhere when `allowed` is null.
///
/// Best-first search on the positive digraph: path probabilities never grow
/// along an extension, so the first time `to` is settled its probability is
/// maximal. With from == to the search looks for the best cycle.
template <typename Scalar>
Witness<Scalar> most_probable_path_within(const Dtmc<Scalar>& d, State from, State to, const StateSet* allowed) {
    require_state(d, from);
    require_state(d, to);
    const std::size_t n = d.size();
    const Scalar zero(0);
    std::vector<Scalar> best(n + 1, zero);
    std::vector<State> pred(n + 1, 0);
    std::vector<bool> settled(n + 1, false);
    std::priority_queue<detail::Candidate<Scalar>> queue;

    auto may_visit = [&](State v) { return v == to || allowed == nullptr || allowed->contains(v); };
    auto relax = [&](State u, const Scalar& base) {
        for (State v = 1; v <= n; ++v) {
            const Scalar& p = d(u, v);
            if (p == zero || settled[v] || !may_visit(v)) continue;
            Scalar candidate = base * p;
            if (candidate > best[v]) {
                best[v] = candidate;
                pred[v] = u;
                queue.push({std::move(candidate), v});
            }
        }
    };

    if (from == to) {
        relax(from, Scalar(1));
    } else {
        best[from] = Scalar(1);
        queue.push({Scalar(1), from});
    }
    while (!queue.empty()) {
        const detail::Candidate<Scalar> top = queue.top();
        queue.pop();
        if (settled[top.state] || top.prob != best[top.state]) continue;
        settled[top.state] = true;
        if (top.state == to) break;
        relax(top.state, top.prob);
    }
    if (!settled[to]) return {};

    Word reversed{to};
    State cur = to;
    do {
        cur = pred[cur];
        reversed.push_back(cur);
    } while (cur != from);
    return {Word(reversed.rbegin(), reversed.rend()), best[to]};
}

template <typename Scalar>
Witness<Scalar> most_probable_path(const Dtmc<Scalar>& d, State from, State to) {
    return most_probable_path_within(d, from, to, static_cast<const StateSet*>(nullptr));
}

template <typename Scalar>
struct RefinementStep {
    std::size_t step;
    StateSet set;
    std::size_t transitions;
    Scalar best_prob;
};

template <typename Scalar>
struct RefinementReport {
    bool violated = false;
    /// 0-based index into the sequence of the step that exceeded the threshold.
    std::optional<std::size_t> step_index;
    /// Best path from the initial state to the target in the chain of the
    /// violating step, or of the last step when nothing was violated.
    Word witness_path;
    Scalar witness_prob{0};
    /// P(reach target) when the last set of the sequence is the whole
    /// non-absorbing set; only filled when nothing was violated.
    std::optional<Scalar> exact_reach;
    std::vector<RefinementStep<Scalar>> trace;
};

/// Abstracts along `seq` one set at a time and stops at the first chain that
/// has a single path from the initial state to `target` with probability
/// strictly above `threshold`.
template <typename Scalar>
RefinementReport<Scalar> refine(const Dtmc<Scalar>& d, State target, const Scalar& threshold,
                                const std::vector<StateSet>& seq) {
    require_state(d, target);
    if (!is_absorbing(d, target)) {
        throw Error(ErrorKind::GoalNotAbsorbing, "target state " + std::to_string(target) + " is not absorbing");
    }
    if (target == d.init()) throw Error(ErrorKind::InitIsGoal, "the initial state is the target");
    if (seq.empty()) throw Error(ErrorKind::InvalidSequence, "the abstraction sequence is empty");
    const StateSet k = non_absorbing(d);
    for (const StateSet& s : seq) {
        require_states(d, s);
        if (!is_subset(s, k)) {
            throw Error(ErrorKind::InvalidSequence, "set " + to_string(s) + " contains an absorbing state");
        }
    }

    RefinementReport<Scalar> report;
    Dtmc<Scalar> current = d;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        current = path_abstract(current, seq[i]);
        Witness<Scalar> w = most_probable_path(current, d.init(), target);
        report.trace.push_back({i, seq[i], transition_count(current), w.prob});
        report.witness_path = std::move(w.path);
        report.witness_prob = std::move(w.prob);
        if (report.witness_prob > threshold) {
            report.violated = true;
            report.step_index = i;
            return report;
        }
    }
    if (seq.back() == k) report.exact_reach = current(d.init(), target);
    return report;
}

/// Maps a positive path of d - (S1, ..., Sn) back to a positive path of `d`.
/// Working from the last set to the first, every transition that leaves the
/// abstracted set is replaced by the most probable path inside that set in
/// the chain before the abstraction.
template <typename Scalar>
Word concretize_witness(const Dtmc<Scalar>& d, const std::vector<StateSet>& seq, const Word& abstract_path) {
    std::vector<Dtmc<Scalar>> chain{d};
    for (const StateSet& s : seq) chain.push_back(path_abstract(chain.back(), s));
    if (abstract_path.empty() || path_prob(chain.back(), abstract_path) == Scalar(0)) {
        throw Error(ErrorKind::NotAPath, to_string(abstract_path) + " is not a path of the abstracted chain");
    }

    Word current = abstract_path;
    for (std::size_t i = seq.size(); i-- > 0;) {
        const StateSet& set = seq[i];
        const Dtmc<Scalar>& before = chain[i];
        Word expanded{current.front()};
        for (std::size_t j = 1; j < current.size(); ++j) {
            const State u = current[j - 1];
            const State v = current[j];
            if (set.contains(u) && !set.contains(v)) {
                const Witness<Scalar> inner = most_probable_path_within(before, u, v, &set);
                if (inner.path.empty()) {
                    throw Error(ErrorKind::NotAPath, "no concrete path behind " + std::to_string(u) + "->" + std::to_string(v));
                }
                expanded.insert(expanded.end(), inner.path.begin() + 1, inner.path.end());
            } else {
                if (before(u, v) == Scalar(0)) {
                    throw Error(ErrorKind::NotAPath, "transition " + std::to_string(u) + "->" + std::to_string(v) +
                                                         " has no concrete counterpart");
                }
                expanded.push_back(v);
            }
        }
        current = std::move(expanded);
    }
    return current;
}

}  // namespace pathabs
