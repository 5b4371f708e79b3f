#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "para/element.hpp"
#include "para/grading.hpp"

namespace para {

/// Multiplication rule of the two-fold tensor algebra.
/// Plain:  (a⊗b)(c⊗d) = ac ⊗ bd.
/// Graded: (a⊗b)(c⊗d) = (-1)^{deg(b)deg(c)} ac ⊗ bd.
enum class TensorMode { Plain, Graded };

/// A finite linear combination of pure tensors of words.
class TensorElement {
  public:
    using Key = std::pair<Word, Word>;
    using TermMap = std::map<Key, Scalar>;

    explicit TensorElement(TensorMode mode = TensorMode::Plain) : mode_(mode) {}

    static TensorElement zero(TensorMode mode) { return TensorElement(mode); }
    static TensorElement one(TensorMode mode) {
        TensorElement t(mode);
        t.add_term(Word{}, Word{}, Scalar(1));
        return t;
    }
    /// a ⊗ b, expanded bilinearly.
    static TensorElement pure(const Element& a, const Element& b, TensorMode mode) {
        TensorElement t(mode);
        for (const auto& [u, cu] : a.terms())
            for (const auto& [v, cv] : b.terms()) t.add_term(u, v, cu * cv);
        return t;
    }

    TensorMode mode() const { return mode_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(Word left, Word right, Scalar c) {
        if (c == 0) return;
        auto [it, inserted] =
            terms_.try_emplace(Key(std::move(left), std::move(right)), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TensorElement& operator+=(const TensorElement& rhs) {
        check_mode(rhs);
        for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& rhs) {
        check_mode(rhs);
        for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) {
        return a += b;
    }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) {
        return a -= b;
    }
    friend TensorElement operator*(const Scalar& c, TensorElement a) {
        if (c == 0) return TensorElement(a.mode_);
        for (auto& [k, v] : a.terms_) v *= c;
        return a;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.mode_ == b.mode_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) {
        return !(a == b);
    }

  private:
    void check_mode(const TensorElement& rhs) const {
        if (mode_ != rhs.mode_)
            throw std::invalid_argument("tensor mode mismatch");
    }

    TensorMode mode_;
    TermMap terms_;

    friend TensorElement tensor_mul(const TensorElement&, const TensorElement&,
                                    const Grading&);
};

inline TensorElement tensor_mul(const TensorElement& x, const TensorElement& y,
                                const Grading& g = Grading::standard()) {
    x.check_mode(y);
    TensorElement r(x.mode());
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            Scalar c = cx * cy;
            if (x.mode() == TensorMode::Graded &&
                degree(kx.second, g) == 1 && degree(ky.first, g) == 1)
                c = -c;
            r.add_term(concat(kx.first, ky.first), concat(kx.second, ky.second), c);
        }
    }
    return r;
}

inline TensorElement operator*(const TensorElement& x, const TensorElement& y) {
    return tensor_mul(x, y);
}

}  // namespace para
