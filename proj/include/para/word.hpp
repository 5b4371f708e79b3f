#pragma once

#include <string>
#include <vector>

#include "para/symbol.hpp"

namespace para {

/// A word of the free algebra: a finite sequence of generators.
/// The empty word is the multiplicative identity.
using Word = std::vector<GenSym>;

inline Word concat(const Word& u, const Word& v) {
    Word w;
    w.reserve(u.size() + v.size());
    w.insert(w.end(), u.begin(), u.end());
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

inline std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += to_string(w[i]);
    }
    return out;
}

}  // namespace para
