#pragma once

// Random inputs for the property tests. Seeds are fixed so failures
// reproduce.

#include <random>

#include "para/element.hpp"
#include "para/relations.hpp"

namespace gen {

using namespace para;

/// Random backend word over the symbols of rs (plus occasional Klein).
inline Word backend_word(std::mt19937_64& rng, const RelationSystem& rs, int max_len,
                         bool allow_klein = true) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> mode(1, rs.modes());
    std::uniform_int_distribution<int> green(1, rs.order());
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> kind(0, 9);
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        if (allow_klein && kind(rng) == 0) {
            w.push_back(GenSym::klein(coin(rng)));
            continue;
        }
        w.push_back(rs.statistic() == Statistic::Bose
                        ? GenSym::green_boson(mode(rng), green(rng), coin(rng))
                        : GenSym::green_fermion(mode(rng), green(rng), coin(rng)));
    }
    return w;
}

/// Random abstract word (para-oscillators of one statistic, optional Klein).
inline Word abstract_word(std::mt19937_64& rng, Statistic stat, int modes, int max_len,
                          bool allow_klein = false) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> mode(1, modes);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> kind(0, 9);
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        if (allow_klein && kind(rng) == 0) {
            w.push_back(GenSym::klein(coin(rng)));
            continue;
        }
        w.push_back(stat == Statistic::Bose ? GenSym::para_boson(mode(rng), coin(rng))
                                            : GenSym::para_fermion(mode(rng), coin(rng)));
    }
    return w;
}

inline Scalar small_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    return Scalar(num(rng), den(rng));
}

template <typename WordGen>
inline Element element_of(std::mt19937_64& rng, int max_terms, WordGen&& word_gen) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    Element e;
    int n = terms(rng);
    for (int i = 0; i < n; ++i) e.add_term(word_gen(), small_scalar(rng));
    return e;
}

}  // namespace gen
