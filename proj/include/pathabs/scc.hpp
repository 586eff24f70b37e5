// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "pathabs/abstraction.hpp"
#include "pathabs/dtmc.hpp"
#include "pathabs/error.hpp"
#include "pathabs/state_set.hpp"

namespace pathabs {

/// Strongly connected components of the positive-probability digraph
/// restricted to a state set.
struct SccPartition {
    /// Topological order of the condensation: a component comes before every
    /// component it has an edge into. Among components whose predecessors are
    /// all listed, the one with the smallest member goes first.
    std::vector<StateSet> components;
};

namespace detail {

// Iterative Tarjan over the states of `k`; emits components sinks-first.
template <typename Scalar>
std::vector<StateSet> tarjan(const Dtmc<Scalar>& d, const StateSet& k) {
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = k.size();
    std::vector<std::vector<std::size_t>> graph(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = 0;
        for (State t : k) {
            if (d(k.members()[i], t) > Scalar(0)) graph[i].push_back(j);
            ++j;
        }
    }

    std::vector<std::size_t> number(n, unvisited);
    std::vector<std::size_t> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next successor)
    std::vector<StateSet> out;
    std::size_t counter = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (number[root] != unvisited) continue;
        call.emplace_back(root, 0);
        number[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, next] = call.back();
            if (next < graph[v].size()) {
                const std::size_t w = graph[v][next++];
                if (number[w] == unvisited) {
                    number[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], number[w]);
                }
                continue;
            }
            const std::size_t finished = v;
            call.pop_back();
            if (!call.empty()) {
                const std::size_t parent = call.back().first;
                lowlink[parent] = std::min(lowlink[parent], lowlink[finished]);
            }
            if (lowlink[finished] == number[finished]) {
                StateSet component;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.insert(k.members()[w]);
                } while (w != finished);
                out.push_back(std::move(component));
            }
        }
    }
    return out;
}

}  // namespace detail

template <typename Scalar>
SccPartition sccs(const Dtmc<Scalar>& d, const StateSet& k) {
    require_states(d, k);
    std::vector<StateSet> found = detail::tarjan(d, k);
    const std::size_t m = found.size();

    std::vector<std::size_t> component_of(d.size() + 1, m);
    for (std::size_t c = 0; c < m; ++c) {
        for (State s : found[c]) component_of[s] = c;
    }
    std::vector<std::set<std::size_t>> succ(m);
    std::vector<std::size_t> indegree(m, 0);
    for (std::size_t c = 0; c < m; ++c) {
        for (State s : found[c]) {
            for (State t : k) {
                const std::size_t ct = component_of[t];
                if (ct != c && d(s, t) > Scalar(0) && succ[c].insert(ct).second) ++indegree[ct];
            }
        }
    }

    // Kahn's algorithm keyed by the smallest member of each component.
    using Entry = std::pair<State, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (std::size_t c = 0; c < m; ++c) {
        if (indegree[c] == 0) ready.emplace(found[c].front(), c);
    }
    SccPartition out;
    while (!ready.empty()) {
        const std::size_t c = ready.top().second;
        ready.pop();
        out.components.push_back(found[c]);
        for (std::size_t next : succ[c]) {
            if (--indegree[next] == 0) ready.emplace(found[next].front(), next);
        }
    }
    return out;
}

/// Components of `k` other than self-loop-free singletons, in `sccs` order.
template <typename Scalar>
std::vector<StateSet> nontrivial_sccs(const Dtmc<Scalar>& d, const StateSet& k) {
    std::vector<StateSet> out;
    for (StateSet& c : sccs(d, k).components) {
        if (c.size() == 1 && d(c.front(), c.front()) == Scalar(0)) continue;
        out.push_back(std::move(c));
    }
    return out;
}

/// Every ordered pair of distinct members is connected by a positive path
/// inside `set`. Singletons qualify.
template <typename Scalar>
bool is_strongly_connected(const Dtmc<Scalar>& d, const StateSet& set) {
    return !set.empty() && sccs(d, set).components.size() == 1;
}

/// d - (U1, ..., Ut, k) where U1..Ut are the nontrivial components of k.
template <typename Scalar>
Dtmc<Scalar> abstract_via_sccs(const Dtmc<Scalar>& d, const StateSet& k) {
    std::vector<StateSet> seq = nontrivial_sccs(d, k);
    seq.push_back(k);
    return path_abstract_seq(d, seq);
}

namespace detail {

template <typename Scalar>
Dtmc<Scalar> abstract_recursive_step(const Dtmc<Scalar>& d, const StateSet& s1, std::vector<StateSet>* trace) {
    const StateSet interior = interior_zero(d, s1);
    if (interior == s1) {
        throw Error(ErrorKind::NonTerminatingInterior,
                    "every state of " + to_string(s1) + " is interior; recursive abstraction would not terminate");
    }
    if (!is_strongly_connected(d, s1)) {
        throw Error(ErrorKind::NotStronglyConnected, to_string(s1) + " is not strongly connected");
    }
    Dtmc<Scalar> current = d;
    for (const StateSet& u : nontrivial_sccs(d, interior)) current = abstract_recursive_step(current, u, trace);
    if (trace != nullptr) trace->push_back(s1);
    return path_abstract(current, s1);
}

}  // namespace detail

/// Recursive abstraction over a strongly connected set: first abstract each
/// nontrivial component of the interior of `s1` recursively, then abstract
/// over `s1` itself. When `trace` is given, it receives the sets in the
/// order they were abstracted over.
///
/// Throws NonTerminatingInterior when every state of `s1` is interior and
/// NotStronglyConnected when `s1` is not strongly connected.
template <typename Scalar>
Dtmc<Scalar> abstract_recursive(const Dtmc<Scalar>& d, const StateSet& s1, std::vector<StateSet>* trace = nullptr) {
    require_states(d, s1);
    return detail::abstract_recursive_step(d, s1, trace);
}

}  // namespace pathabs
