#pragma once

#include "para/symbol.hpp"
#include "para/word.hpp"

namespace para {

/// Z2 grading of generators. The standard grading makes every oscillator
/// odd and Klein even; AllEven exists so the graded tensor product can be
/// checked to degenerate to the plain one.
class Grading {
  public:
    static Grading standard() { return Grading(Kind::OscillatorsOdd); }
    static Grading all_even() { return Grading(Kind::AllEven); }

    int operator()(GenSym s) const {
        if (kind_ == Kind::AllEven) return 0;
        return s.is_oscillator() ? 1 : 0;
    }

  private:
    enum class Kind { OscillatorsOdd, AllEven };
    explicit Grading(Kind k) : kind_(k) {}
    Kind kind_;
};

/// Degree of a word: sum of generator degrees mod 2.
inline int degree(const Word& w, const Grading& g = Grading::standard()) {
    int d = 0;
    for (GenSym s : w) d ^= g(s);
    return d;
}

}  // namespace para
