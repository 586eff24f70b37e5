// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pathabs/state_set.hpp"

#include <algorithm>
#include <iterator>

namespace pathabs {

namespace {

void normalize(std::vector<State>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

StateSet::StateSet(std::initializer_list<State> members) : members_(members) { normalize(members_); }

StateSet::StateSet(std::vector<State> members) : members_(std::move(members)) { normalize(members_); }

StateSet StateSet::range(State first, State last) {
    StateSet out;
    for (State s = first; s <= last; ++s) out.members_.push_back(s);
    return out;
}

bool StateSet::contains(State s) const { return std::binary_search(members_.begin(), members_.end(), s); }

void StateSet::insert(State s) {
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it == members_.end() || *it != s) members_.insert(it, s);
}

void StateSet::erase(State s) {
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it != members_.end() && *it == s) members_.erase(it);
}

std::size_t StateSet::position(State s) const {
    return static_cast<std::size_t>(std::lower_bound(members_.begin(), members_.end(), s) - members_.begin());
}

std::vector<Eigen::Index> StateSet::indices() const {
    std::vector<Eigen::Index> out;
    out.reserve(members_.size());
    for (State s : members_) out.push_back(static_cast<Eigen::Index>(s) - 1);
    return out;
}

StateSet set_union(const StateSet& a, const StateSet& b) {
    std::vector<State> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return StateSet(std::move(out));
}

StateSet set_intersection(const StateSet& a, const StateSet& b) {
    std::vector<State> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return StateSet(std::move(out));
}

StateSet set_difference(const StateSet& a, const StateSet& b) {
    std::vector<State> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return StateSet(std::move(out));
}

bool is_subset(const StateSet& a, const StateSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::string to_string(const StateSet& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out += ',';
        out += std::to_string(*it);
    }
    return out + "}";
}

}  // namespace pathabs
