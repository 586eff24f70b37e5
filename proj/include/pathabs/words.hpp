// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pathabs/dtmc.hpp"
#include "pathabs/error.hpp"
#include "pathabs/state_set.hpp"

namespace pathabs {

/// A finite sequence of states; the empty word is the empty vector.
using Word = std::vector<State>;
using WordSet = std::set<Word>;

/// x' <= x in the prefix order (x' = x included).
bool is_prefix(const Word& prefix, const Word& x);

/// u * v for u ending and v starting with the same letter: the concatenation
/// with the shared junction letter written once. Throws std::invalid_argument
/// when the junction letters differ or either word is empty.
Word splice(const Word& u, const Word& v);

/// Replaces every maximal factor of `x` lying wholly in `sigma1` by its first
/// letter.
Word minus(const Word& x, const StateSet& sigma1);

/// Left-to-right fold of `minus` over `sigmas`.
Word minus_seq(const Word& x, const std::vector<StateSet>& sigmas);

/// Elements of `words` that have no strict prefix in `words`.
WordSet minimal_prefixes(const WordSet& words);

/// All minimal words y (w.r.t. the prefix order) with |y| <= max_length and
/// minus(y, sigma1) == x.
///
/// A minimal preimage is x with some word over sigma1 inserted right after
/// each sigma1-letter of x except the last letter; the preimage is empty as
/// soon as x has two adjacent sigma1-letters. Words are produced by expanding
/// those slots in lexicographic order.
WordSet preimage_min_bounded(const Word& x, const StateSet& sigma1, std::size_t max_length);

/// Every word s w t with w ranging over sigma1^interior_length, in
/// lexicographic order. Exponential; intended for small instances.
std::vector<Word> words_through(State s, const StateSet& sigma1, std::size_t interior_length, State t);

/// `s2 s5 s6`
std::string to_string(const Word& x);

/// Product of the one-step probabilities along `x`; 1 for a single letter.
template <typename Scalar>
Scalar path_prob(const Dtmc<Scalar>& d, const Word& x) {
    if (x.empty()) throw Error(ErrorKind::EmptyWord, "path probability of the empty word");
    for (State s : x) require_state(d, s);
    Scalar p(1);
    for (std::size_t i = 1; i < x.size(); ++i) {
        p *= d(x[i - 1], x[i]);
        if (p == Scalar(0)) break;
    }
    return p;
}

/// Probability mass of a finite path set: the sum of `path_prob` over its
/// minimal prefixes.
template <typename Scalar>
Scalar finite_set_prob(const Dtmc<Scalar>& d, const WordSet& words) {
    Scalar total(0);
    for (const Word& x : minimal_prefixes(words)) total += path_prob(d, x);
    return total;
}

/// Truncated local reachability: the mass of { s w t | w in sigma1^i, i <= max_hops }.
///
/// The path set is enumerated layer by layer (one layer per interior
/// length). Within a layer, words that end in the same letter are carried as
/// a single accumulated mass; this is exact because the mass of a one-letter
/// extension factors as P(x r q) = P(x r) P(r q).
template <typename Scalar>
Scalar local_reach_prob_bounded(const Dtmc<Scalar>& d, State s, const StateSet& sigma1, State t,
                                std::size_t max_hops) {
    require_state(d, s);
    require_state(d, t);
    require_states(d, sigma1);
    std::map<State, Scalar> layer{{s, Scalar(1)}};
    Scalar total(0);
    for (std::size_t hops = 0;; ++hops) {
        for (const auto& [last, mass] : layer) total += mass * d(last, t);
        if (hops == max_hops) break;
        std::map<State, Scalar> next;
        for (const auto& [last, mass] : layer) {
            for (State q : sigma1) {
                const Scalar& p = d(last, q);
                if (p > Scalar(0)) next[q] += mass * p;
            }
        }
        if (next.empty()) break;
        layer = std::move(next);
    }
    return total;
}

}  // namespace pathabs
