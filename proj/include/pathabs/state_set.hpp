// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace pathabs {

/// States are 1-based: a chain with n states has states 1..n.
using State = std::size_t;

/// A subset of the state space, iterated in ascending order.
class StateSet {
   public:
    using const_iterator = std::vector<State>::const_iterator;

    StateSet() = default;
    StateSet(std::initializer_list<State> members);
    explicit StateSet(std::vector<State> members);

    /// {first, ..., last}; empty when last < first.
    static StateSet range(State first, State last);

    bool contains(State s) const;
    void insert(State s);
    void erase(State s);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const_iterator begin() const { return members_.begin(); }
    const_iterator end() const { return members_.end(); }
    State front() const { return members_.front(); }
    State back() const { return members_.back(); }
    const std::vector<State>& members() const { return members_; }

    /// Position of a member in ascending order.
    std::size_t position(State s) const;

    /// 0-based Eigen indices, for slicing matrices.
    std::vector<Eigen::Index> indices() const;

    friend bool operator==(const StateSet&, const StateSet&) = default;
    friend auto operator<=>(const StateSet&, const StateSet&) = default;

   private:
    std::vector<State> members_;
};

StateSet set_union(const StateSet& a, const StateSet& b);
StateSet set_intersection(const StateSet& a, const StateSet& b);
StateSet set_difference(const StateSet& a, const StateSet& b);
bool is_subset(const StateSet& a, const StateSet& b);

/// `{1,2,5}`
std::string to_string(const StateSet& s);

}  // namespace pathabs
