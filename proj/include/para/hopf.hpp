#pragma once

#include <array>
#include <map>
#include <tuple>

#include "para/parastat.hpp"
#include "para/tensor.hpp"

namespace para {

/// The three coalgebra structures carried by the paraparticle algebras.
/// ParaBoseK twists the oscillator coproduct by the Klein generator and is a
/// plain Hopf algebra; ParaFermi is plain with a primitive coproduct;
/// GradedSuper is the Hopf-superalgebra structure on the parabosons (no K),
/// living over the graded tensor product.
enum class HopfVariant { ParaBoseK, ParaFermi, GradedSuper };

inline std::string to_string(HopfVariant v) {
    switch (v) {
        case HopfVariant::ParaBoseK: return "parabose-K";
        case HopfVariant::ParaFermi: return "parafermi";
        case HopfVariant::GradedSuper: return "graded-super";
    }
    return "?";
}

class HopfStructure {
  public:
    static HopfStructure para_bose_k() { return HopfStructure(HopfVariant::ParaBoseK); }
    static HopfStructure para_fermi() { return HopfStructure(HopfVariant::ParaFermi); }
    static HopfStructure graded_super() {
        return HopfStructure(HopfVariant::GradedSuper);
    }

    HopfVariant variant() const { return variant_; }
    Statistic statistic() const {
        return variant_ == HopfVariant::ParaFermi ? Statistic::Fermi : Statistic::Bose;
    }
    TensorMode tensor_mode() const {
        return variant_ == HopfVariant::GradedSuper ? TensorMode::Graded
                                                    : TensorMode::Plain;
    }
    bool graded_antipode() const { return variant_ == HopfVariant::GradedSuper; }

    /// Generator coproduct table.
    TensorElement coproduct_sym(GenSym s) const {
        check_symbol(s);
        Element g = Element::generator(s);
        if (s.is_klein())  // Δ(K) = K⊗K, Δ(K†) = K†⊗K†
            return TensorElement::pure(g, g, tensor_mode());
        Element unit = Element::one();
        if (variant_ == HopfVariant::ParaBoseK) {
            // Δ(b) = b⊗1 + K⊗b, Δ(b†) = b†⊗1 + K†⊗b†
            Element twist = Element::generator(GenSym::klein(s.dagger()));
            return TensorElement::pure(g, unit, tensor_mode()) +
                   TensorElement::pure(twist, g, tensor_mode());
        }
        return TensorElement::pure(g, unit, tensor_mode()) +
               TensorElement::pure(unit, g, tensor_mode());
    }

    Scalar counit_sym(GenSym s) const {
        check_symbol(s);
        return s.is_klein() ? Scalar(1) : Scalar(0);
    }

    Element antipode_sym(GenSym s) const {
        check_symbol(s);
        if (s.is_klein()) return Element::generator(s.adjoint());  // S(K) = K†
        if (variant_ == HopfVariant::ParaBoseK) {
            // S(b) = b K†, S(b†) = b† K
            Word w{s, GenSym::klein(!s.dagger())};
            return Element::from_word(std::move(w));
        }
        return -Element::generator(s);
    }

  private:
    explicit HopfStructure(HopfVariant v) : variant_(v) {}

    void check_symbol(GenSym s) const {
        if (s.is_green())
            throw std::invalid_argument("Hopf maps act on abstract symbols only: " +
                                        to_string(s));
        if (s.is_klein()) {
            if (variant_ != HopfVariant::ParaBoseK)
                throw std::invalid_argument("Klein symbol under variant " +
                                            to_string(variant_));
            return;
        }
        Family want = statistic() == Statistic::Bose ? Family::ParaBoson
                                                     : Family::ParaFermion;
        if (s.family() != want)
            throw std::invalid_argument("symbol " + to_string(s) +
                                        " does not belong to variant " +
                                        to_string(variant_));
    }

    HopfVariant variant_;
};

/// Δ extended as an algebra homomorphism into the (graded) tensor algebra.
inline TensorElement coproduct(const Element& x, const HopfStructure& h) {
    TensorElement result(h.tensor_mode());
    for (const auto& [w, c] : x.terms()) {
        TensorElement acc = TensorElement::one(h.tensor_mode());
        for (GenSym s : w) acc = tensor_mul(acc, h.coproduct_sym(s));
        result += c * acc;
    }
    return result;
}

/// ε extended as an algebra homomorphism to scalars.
inline Scalar counit(const Element& x, const HopfStructure& h) {
    Scalar total(0);
    for (const auto& [w, c] : x.terms()) {
        Scalar prod = c;
        for (GenSym s : w) {
            if (prod == 0) break;
            prod *= h.counit_sym(s);
        }
        total += prod;
    }
    return total;
}

/// S extended as an anti-homomorphism; in the graded variant
/// S(uv) = (-1)^{deg(u)deg(v)} S(v)S(u).
inline Element antipode(const Element& x, const HopfStructure& h) {
    Grading g = Grading::standard();
    Element result;
    for (const auto& [w, c] : x.terms()) {
        Element acc = Element::one();
        int prefix_deg = 0;
        for (GenSym s : w) {
            Element img = h.antipode_sym(s);
            if (h.graded_antipode() && (prefix_deg & g(s))) img = -img;
            acc = img * acc;
            prefix_deg ^= g(s);
        }
        result += c * acc;
    }
    return result;
}

/// Both legs through the Green map (left at order of spec_left, right of
/// spec_right), re-expanded bilinearly.
inline TensorElement tensor_green_map(const TensorElement& t,
                                      const ParaAlgebraSpec& spec_left,
                                      const ParaAlgebraSpec& spec_right) {
    TensorElement result(t.mode());
    for (const auto& [key, c] : t.terms()) {
        Element left = green_map(Element::from_word(key.first), spec_left);
        Element right = green_map(Element::from_word(key.second), spec_right);
        for (const auto& [u, cu] : left.terms())
            for (const auto& [v, cv] : right.terms())
                result.add_term(u, v, c * cu * cv);
    }
    return result;
}

inline bool tensor_vanishes(const TensorElement& t, const ParaAlgebraSpec& sl,
                            const ParaAlgebraSpec& sr) {
    return tensor_normal_form(tensor_green_map(t, sl, sr), sl.backend(), sr.backend())
        .empty();
}

namespace detail {

/// Minimal three-fold tensor support for the coassociativity axiom.
struct Tensor3 {
    std::map<std::tuple<Word, Word, Word>, Scalar> terms;

    void add(Word a, Word b, Word c, Scalar v) {
        if (v == 0) return;
        auto key = std::make_tuple(std::move(a), std::move(b), std::move(c));
        auto [it, inserted] = terms.try_emplace(std::move(key), v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) terms.erase(it);
        }
    }
};

inline Tensor3 expand_left(const TensorElement& t, const HopfStructure& h) {
    Tensor3 out;
    for (const auto& [key, c] : t.terms()) {
        TensorElement d = coproduct(Element::from_word(key.first), h);
        for (const auto& [dk, dc] : d.terms())
            out.add(dk.first, dk.second, key.second, c * dc);
    }
    return out;
}

inline Tensor3 expand_right(const TensorElement& t, const HopfStructure& h) {
    Tensor3 out;
    for (const auto& [key, c] : t.terms()) {
        TensorElement d = coproduct(Element::from_word(key.second), h);
        for (const auto& [dk, dc] : d.terms())
            out.add(key.first, dk.first, dk.second, c * dc);
    }
    return out;
}

inline Tensor3 triple_normal_form(const Tensor3& t, const ParaAlgebraSpec& spec) {
    RelationSystem rs = spec.backend();
    Tensor3 out;
    for (const auto& [key, c] : t.terms) {
        Element a = normal_form(green_map(Element::from_word(std::get<0>(key)), spec), rs);
        Element b = normal_form(green_map(Element::from_word(std::get<1>(key)), spec), rs);
        Element d = normal_form(green_map(Element::from_word(std::get<2>(key)), spec), rs);
        for (const auto& [u, cu] : a.terms())
            for (const auto& [v, cv] : b.terms())
                for (const auto& [w, cw] : d.terms())
                    out.add(u, v, w, c * cu * cv * cw);
    }
    return out;
}

}  // namespace detail

/// Checks that Δ, ε, S send every defining relation to zero, so the
/// generator tables define maps on the quotient algebra. Tensor legs are
/// Green-mapped at orders (order_left, order_right).
inline Report verify_well_defined(const HopfStructure& h, int modes, int order_left,
                                  int order_right) {
    Stopwatch timer;
    Report report("hopf well-defined " + to_string(h.variant()) + " n=" +
                  std::to_string(modes) + " (p,q)=(" + std::to_string(order_left) +
                  "," + std::to_string(order_right) + ")");
    ParaAlgebraSpec sl(h.statistic(), modes, order_left);
    ParaAlgebraSpec sr(h.statistic(), modes, order_right);
    RelationSystem rl = sl.backend(), rr = sr.backend();

    std::vector<NamedRelation> rels = trilinear_relations(h.statistic(), modes);
    if (h.variant() == HopfVariant::ParaBoseK)
        for (auto& rel : klein_relations(modes)) rels.push_back(std::move(rel));

    auto rows = parallel_map<std::array<CheckRecord, 4>>(rels.size(), [&](std::size_t i) {
        const auto& rel = rels[i];
        std::array<CheckRecord, 4> out;
        TensorElement d = tensor_normal_form(
            tensor_green_map(coproduct(rel.residue, h), sl, sr), rl, rr);
        out[0] = {"delta(" + rel.id + ")", d.empty(), ""};
        Scalar e = counit(rel.residue, h);
        out[1] = {"epsilon(" + rel.id + ")", e == 0, e == 0 ? "" : pretty_string(e)};
        Element s = antipode(rel.residue, h);
        Element nf_l = normal_form(green_map(s, sl), rl);
        out[2] = {"antipode(" + rel.id + ") @p", nf_l.empty(),
                  nf_l.empty() ? "" : to_string(nf_l)};
        Element nf_r = normal_form(green_map(s, sr), rr);
        out[3] = {"antipode(" + rel.id + ") @q", nf_r.empty(),
                  nf_r.empty() ? "" : to_string(nf_r)};
        return out;
    });
    for (auto& row : rows)
        for (auto& rec : row) report.add(std::move(rec.id), rec.pass, std::move(rec.witness));
    report.set_elapsed_ms(timer.ms());
    return report;
}

/// Generators, all bilinears N_lm, and all two-letter generator products:
/// enough probes that homomorphy extends the axioms algebra-wide.
inline std::vector<Element> default_probes(const HopfStructure& h, int modes) {
    ParaAlgebraSpec spec(h.statistic(), modes, 1);
    std::vector<Element> gens;
    for (int i = 1; i <= modes; ++i) {
        gens.push_back(oscillator(spec, i, false));
        gens.push_back(oscillator(spec, i, true));
    }
    if (h.variant() == HopfVariant::ParaBoseK) {
        gens.push_back(kleinK());
        gens.push_back(kleinKdag());
    }
    std::vector<Element> probes = gens;
    for (int l = 1; l <= modes; ++l)
        for (int m = 1; m <= modes; ++m) probes.push_back(build_bilinear(l, m, spec));
    for (const Element& x : gens)
        for (const Element& y : gens) probes.push_back(x * y);
    return probes;
}

/// The consistency conditions: coassociativity, the counit laws, and the
/// antipode laws, each checked modulo normal form at the spec's order.
inline Report verify_hopf_axioms(const HopfStructure& h, const ParaAlgebraSpec& spec,
                                 const std::vector<Element>& probes) {
    if (spec.statistic != h.statistic())
        throw std::invalid_argument("statistic does not match Hopf variant");
    Stopwatch timer;
    Report report("hopf axioms " + to_string(h.variant()) + " " + spec.tag());
    RelationSystem rs = spec.backend();

    auto element_vanishes = [&](const Element& e) {
        return normal_form(green_map(e, spec), rs).empty();
    };

    auto rows = parallel_map<std::array<CheckRecord, 3>>(probes.size(), [&](std::size_t i) {
        const Element& a = probes[i];
        std::string id = "probe " + std::to_string(i + 1);
        std::array<CheckRecord, 3> out;

        TensorElement d = coproduct(a, h);

        // (Δ⊗id)Δ = (id⊗Δ)Δ
        detail::Tensor3 lhs =
            detail::triple_normal_form(detail::expand_left(d, h), spec);
        detail::Tensor3 rhs =
            detail::triple_normal_form(detail::expand_right(d, h), spec);
        out[0] = {id + " coassociativity", lhs.terms == rhs.terms, ""};

        // (ε⊗id)Δ(a) = (id⊗ε)Δ(a) = a
        Element from_left, from_right;
        for (const auto& [key, c] : d.terms()) {
            from_left += (c * counit(Element::from_word(key.first), h)) *
                         Element::from_word(key.second);
            from_right += (c * counit(Element::from_word(key.second), h)) *
                          Element::from_word(key.first);
        }
        bool counit_ok =
            element_vanishes(from_left - a) && element_vanishes(from_right - a);
        out[1] = {id + " counit", counit_ok, ""};

        // m(S⊗id)Δ(a) = m(id⊗S)Δ(a) = ε(a)·1
        Element want = Element::constant(counit(a, h));
        Element m_left, m_right;
        for (const auto& [key, c] : d.terms()) {
            m_left += c * (antipode(Element::from_word(key.first), h) *
                           Element::from_word(key.second));
            m_right += c * (Element::from_word(key.first) *
                            antipode(Element::from_word(key.second), h));
        }
        bool antipode_ok =
            element_vanishes(m_left - want) && element_vanishes(m_right - want);
        out[2] = {id + " antipode", antipode_ok, ""};
        return out;
    });
    for (auto& row : rows)
        for (auto& rec : row) report.add(std::move(rec.id), rec.pass, std::move(rec.witness));
    report.set_elapsed_ms(timer.ms());
    return report;
}

inline Report verify_hopf_axioms(const HopfStructure& h, const ParaAlgebraSpec& spec) {
    return verify_hopf_axioms(h, spec, default_probes(h, spec.modes));
}

/// Δ(N_lm) = N_lm⊗1 + 1⊗N_lm for every bilinear, checked in the tensor
/// algebra at leg orders (order_left, order_right).
inline Report verify_bilinear_primitivity(const HopfStructure& h, int modes,
                                          int order_left, int order_right) {
    Stopwatch timer;
    Report report("bilinear primitivity " + to_string(h.variant()) + " n=" +
                  std::to_string(modes) + " (p,q)=(" + std::to_string(order_left) +
                  "," + std::to_string(order_right) + ")");
    ParaAlgebraSpec sl(h.statistic(), modes, order_left);
    ParaAlgebraSpec sr(h.statistic(), modes, order_right);
    for (int l = 1; l <= modes; ++l) {
        for (int m = 1; m <= modes; ++m) {
            Element n_lm = build_bilinear(l, m, sl);
            TensorElement residue = coproduct(n_lm, h) -
                                    TensorElement::pure(n_lm, Element::one(), h.tensor_mode()) -
                                    TensorElement::pure(Element::one(), n_lm, h.tensor_mode());
            bool ok = tensor_vanishes(residue, sl, sr);
            report.add("delta(N_" + std::to_string(l) + std::to_string(m) +
                           ") primitive",
                       ok);
        }
    }
    report.set_elapsed_ms(timer.ms());
    return report;
}

}  // namespace para
