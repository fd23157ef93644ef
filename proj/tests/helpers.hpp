#pragma once

#include <vector>

#include "alcove/root_system.hpp"

namespace alcove::testing {

inline void reduced_words_rec(int n, const WeylElement& w, Word& cur,
                              std::vector<Word>& out) {
    if (w == WeylElement::longest(n)) {
        out.push_back(cur);
        return;
    }
    for (int p = 1; p < n; ++p) {
        auto next = w.times_reflection(Root{p, p + 1});
        if (next.length() != w.length() + 1) continue;
        cur.push_back(p);
        reduced_words_rec(n, next, cur, out);
        cur.pop_back();
    }
}

/// All reduced words for the longest element of S_n.
inline std::vector<Word> all_reduced_words(int n) {
    std::vector<Word> out;
    Word cur;
    reduced_words_rec(n, WeylElement::identity(n), cur, out);
    return out;
}

}  // namespace alcove::testing
