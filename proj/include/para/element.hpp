#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "para/scalar.hpp"
#include "para/word.hpp"

namespace para {

namespace detail {

enum : unsigned { kLevelAbstract = 1u, kLevelGreen = 2u };

inline unsigned word_level(const Word& w) {
    unsigned lvl = 0;
    for (GenSym s : w) {
        if (s.is_abstract()) lvl |= kLevelAbstract;
        else if (s.is_green()) lvl |= kLevelGreen;
    }
    return lvl;
}

}  // namespace detail

/// A finite linear combination of words with exact rational coefficients.
/// Canonical by construction: no repeated words, no zero coefficients.
/// Abstract-level and Green-level oscillators never mix in one element.
class Element {
  public:
    using TermMap = std::map<Word, Scalar>;

    Element() = default;

    static Element zero() { return Element(); }
    static Element one() { return from_word(Word{}); }
    static Element generator(GenSym s) { return from_word(Word{s}); }
    static Element from_word(Word w, Scalar c = Scalar(1)) {
        Element e;
        e.add_term(std::move(w), std::move(c));
        return e;
    }
    static Element constant(Scalar c) { return from_word(Word{}, std::move(c)); }

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(Word w, Scalar c) {
        if (c == 0) return;
        unsigned lvl = detail::word_level(w);
        if ((level_ | lvl) == (detail::kLevelAbstract | detail::kLevelGreen))
            throw std::invalid_argument(
                "element mixes abstract and Green-component symbols");
        level_ |= lvl;
        auto [it, inserted] = terms_.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& rhs) {
        for (const auto& [w, c] : rhs.terms_) add_term(w, c);
        return *this;
    }
    Element& operator-=(const Element& rhs) {
        for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
        return *this;
    }
    Element& operator*=(const Scalar& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(const Element& a) {
        Element r;
        for (const auto& [w, c] : a.terms_) r.add_term(w, -c);
        return r;
    }
    friend Element operator*(const Scalar& c, Element a) { return a *= c; }
    friend Element operator*(Element a, const Scalar& c) { return a *= c; }

    /// Free product: bilinear extension of word concatenation.
    friend Element operator*(const Element& a, const Element& b) {
        Element r;
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) r.add_term(concat(u, v), cu * cv);
        return r;
    }
    Element& operator*=(const Element& rhs) { return *this = *this * rhs; }

    friend bool operator==(const Element& a, const Element& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  private:
    TermMap terms_;
    unsigned level_ = 0;
};

inline Element commutator(const Element& a, const Element& b) {
    return a * b - b * a;
}
inline Element anticommutator(const Element& a, const Element& b) {
    return a * b + b * a;
}

}  // namespace para
