#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "para/scalar.hpp"
#include "para/symbol.hpp"
#include "para/word.hpp"

namespace para {

enum class Statistic { Bose, Fermi };

inline std::string to_string(Statistic s) {
    return s == Statistic::Bose ? "bose" : "fermi";
}

/// The sign slots of the backend relation table. Tests flip individual
/// slots to confirm the verification suites are sensitive to each one.
enum class RelationSign {
    SameConj,   // x x'† within one Green component: x y† = s y† x (+ δ)
    SameLike,   // like pair within one component
    CrossConj,  // conjugate pair across components
    CrossLike,  // like pair across components
    Delta,      // the δ_ij term of the same-component conjugate relation
    Klein,      // Klein past an oscillator
};

/// What one reducible adjacent pair rewrites to: an optional swapped pair
/// (with sign) plus an optional scalar term where the pair is deleted.
struct PairRewrite {
    bool has_swap = false;
    int swap_sign = 1;
    bool has_scalar = false;
    Scalar scalar_coeff = Scalar(0);
};

/// The Green-component backend algebra for one statistic at fixed
/// (modes n, order p): colored Weyl/Clifford relations plus the Klein
/// generator. Every rule strictly shrinks (length, inversions), so any
/// application order terminates.
class RelationSystem {
  public:
    RelationSystem(Statistic stat, int modes, int order)
        : stat_(stat), modes_(modes), order_(order) {
        if (modes < 1) throw std::invalid_argument("modes must be >= 1");
        if (order < 1) throw std::invalid_argument("order must be >= 1");
        if (stat == Statistic::Bose) {
            same_conj_ = +1; same_like_ = +1;
            cross_conj_ = -1; cross_like_ = -1;
        } else {
            same_conj_ = -1; same_like_ = -1;
            cross_conj_ = +1; cross_like_ = +1;
        }
    }

    Statistic statistic() const { return stat_; }
    int modes() const { return modes_; }
    int order() const { return order_; }

    Family green_family() const {
        return stat_ == Statistic::Bose ? Family::GreenBoson : Family::GreenFermion;
    }

    /// Mutated copy with one relation sign flipped (test hook).
    RelationSystem with_flipped(RelationSign which) const {
        RelationSystem r = *this;
        switch (which) {
            case RelationSign::SameConj: r.same_conj_ = -r.same_conj_; break;
            case RelationSign::SameLike: r.same_like_ = -r.same_like_; break;
            case RelationSign::CrossConj: r.cross_conj_ = -r.cross_conj_; break;
            case RelationSign::CrossLike: r.cross_like_ = -r.cross_like_; break;
            case RelationSign::Delta: r.delta_ = -r.delta_; break;
            case RelationSign::Klein: r.klein_ = -r.klein_; break;
        }
        return r;
    }

    /// Rejects abstract symbols, wrong-statistic components, and indices
    /// outside the declared (n, p) ranges.
    void validate_symbol(GenSym s) const {
        if (s.is_klein()) return;
        if (s.family() != green_family())
            throw std::invalid_argument("symbol not in this backend algebra: " +
                                        to_string(s));
        if (s.mode() > modes_)
            throw std::invalid_argument("mode out of declared range: " + to_string(s));
        if (s.green() > order_)
            throw std::invalid_argument("Green index out of declared range: " +
                                        to_string(s));
    }

    void validate_word(const Word& w) const {
        for (GenSym s : w) validate_symbol(s);
    }

    /// Rewrite rule for the adjacent pair (a, b), or nullopt when the pair
    /// is already in canonical order.
    std::optional<PairRewrite> reduce_pair(GenSym a, GenSym b) const {
        if (a.is_klein() && b.is_klein()) {
            if (a.dagger() != b.dagger()) {
                PairRewrite r;
                r.has_scalar = true;
                r.scalar_coeff = Scalar(1);  // K K† = K† K = 1
                return r;
            }
            return std::nullopt;
        }
        if (a.is_klein() && b.is_oscillator()) {
            PairRewrite r;
            r.has_swap = true;
            r.swap_sign = klein_;
            return r;
        }
        if (b.is_klein()) return std::nullopt;  // oscillator then Klein: in order

        // Two oscillators.
        bool same_component = a.green() == b.green();
        if (!a.dagger() && b.dagger()) {
            // Annihilator before creator: always out of order.
            PairRewrite r;
            r.has_swap = true;
            r.swap_sign = same_component ? same_conj_ : cross_conj_;
            if (same_component && a.mode() == b.mode()) {
                r.has_scalar = true;
                r.scalar_coeff = Scalar(delta_);
            }
            return r;
        }
        if (a.dagger() != b.dagger()) return std::nullopt;  // creator then annihilator

        // Like pair: both creators or both annihilators; sort by (mode, green).
        auto key = [](GenSym s) { return std::pair<int, int>(s.mode(), s.green()); };
        if (key(a) < key(b)) return std::nullopt;
        if (key(a) == key(b)) {
            // Equal symbols: an anticommuting like pair is nilpotent, so the
            // term vanishes (a rewrite with no replacement terms).
            if (same_like_ == -1) return PairRewrite{};
            return std::nullopt;
        }
        PairRewrite r;
        r.has_swap = true;
        r.swap_sign = same_component ? same_like_ : cross_like_;
        return r;
    }

    /// True iff no adjacent pair of w is reducible.
    bool is_normal(const Word& w) const {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (reduce_pair(w[i], w[i + 1])) return false;
        return true;
    }

  private:
    Statistic stat_;
    int modes_;
    int order_;
    int same_conj_, same_like_, cross_conj_, cross_like_;
    int delta_ = +1;
    int klein_ = -1;
};

}  // namespace para
