// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pathabs/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathabs {

bool is_prefix(const Word& prefix, const Word& x) {
    return prefix.size() <= x.size() && std::equal(prefix.begin(), prefix.end(), x.begin());
}

Word splice(const Word& u, const Word& v) {
    if (u.empty() || v.empty() || u.back() != v.front()) {
        throw std::invalid_argument("splice: junction letters differ");
    }
    Word out = u;
    out.insert(out.end(), v.begin() + 1, v.end());
    return out;
}

Word minus(const Word& x, const StateSet& sigma1) {
    Word out;
    out.reserve(x.size());
    bool inside = false;
    for (State letter : x) {
        const bool in_sigma1 = sigma1.contains(letter);
        if (!(in_sigma1 && inside)) out.push_back(letter);
        inside = in_sigma1;
    }
    return out;
}

Word minus_seq(const Word& x, const std::vector<StateSet>& sigmas) {
    Word out = x;
    for (const StateSet& sigma : sigmas) out = minus(out, sigma);
    return out;
}

WordSet minimal_prefixes(const WordSet& words) {
    WordSet out;
    for (const Word& x : words) {
        bool minimal = true;
        Word prefix;
        for (std::size_t len = 0; len < x.size() && minimal; ++len) {
            if (words.contains(prefix)) minimal = false;
            prefix.push_back(x[len]);
        }
        if (minimal) out.insert(x);
    }
    return out;
}

namespace {

// Builds minimal preimages of x left to right. After each sigma1-letter of x
// except the last one, `fill` inserts sigma1-words within the length budget.
struct PreimageExpander {
    const Word& x;
    const StateSet& sigma1;
    std::size_t max_length;
    WordSet& out;

    void expand(std::size_t pos, Word& current) {
        if (pos == x.size()) {
            out.insert(current);
            return;
        }
        current.push_back(x[pos]);
        const bool slot = sigma1.contains(x[pos]) && pos + 1 < x.size();
        if (slot) {
            fill(pos, current);
        } else {
            expand(pos + 1, current);
        }
        current.pop_back();
    }

    // Either close the slot after x[pos] or extend it by one more sigma1-letter.
    void fill(std::size_t pos, Word& current) {
        expand(pos + 1, current);
        if (current.size() + (x.size() - pos - 1) >= max_length) return;
        for (State letter : sigma1) {
            current.push_back(letter);
            fill(pos, current);
            current.pop_back();
        }
    }
};

}  // namespace

WordSet preimage_min_bounded(const Word& x, const StateSet& sigma1, std::size_t max_length) {
    WordSet out;
    if (x.size() > max_length) return out;
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (sigma1.contains(x[i - 1]) && sigma1.contains(x[i])) return out;
    }
    Word current;
    PreimageExpander{x, sigma1, max_length, out}.expand(0, current);
    return out;
}

std::vector<Word> words_through(State s, const StateSet& sigma1, std::size_t interior_length, State t) {
    std::vector<Word> out;
    Word current{s};
    auto rec = [&](auto&& self, std::size_t remaining) -> void {
        if (remaining == 0) {
            current.push_back(t);
            out.push_back(current);
            current.pop_back();
            return;
        }
        for (State letter : sigma1) {
            current.push_back(letter);
            self(self, remaining - 1);
            current.pop_back();
        }
    };
    rec(rec, interior_length);
    return out;
}

std::string to_string(const Word& x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) out += ' ';
        out += 's' + std::to_string(x[i]);
    }
    return out.empty() ? "ε" : out;
}

}  // namespace pathabs
