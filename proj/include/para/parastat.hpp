#pragma once

#include <string>
#include <vector>

#include "para/element.hpp"
#include "para/relations.hpp"
#include "para/report.hpp"
#include "para/rewrite.hpp"
#include "para/text.hpp"

namespace para {

/// One paraparticle algebra: statistic, number of modes n, order p.
struct ParaAlgebraSpec {
    Statistic statistic;
    int modes;
    int order;

    ParaAlgebraSpec(Statistic s, int n, int p) : statistic(s), modes(n), order(p) {
        if (n < 1) throw std::invalid_argument("modes must be >= 1");
        if (p < 1) throw std::invalid_argument("order must be >= 1");
    }

    GenSym oscillator(int mode, bool dagger) const {
        return statistic == Statistic::Bose ? GenSym::para_boson(mode, dagger)
                                            : GenSym::para_fermion(mode, dagger);
    }
    RelationSystem backend() const {
        return RelationSystem(statistic, modes, order);
    }
    std::string tag() const {
        return to_string(statistic) + " n=" + std::to_string(modes) +
               " p=" + std::to_string(order);
    }
};

// Abstract generator shorthands.
inline Element b(int i) { return Element::generator(GenSym::para_boson(i, false)); }
inline Element bdag(int i) { return Element::generator(GenSym::para_boson(i, true)); }
inline Element f(int i) { return Element::generator(GenSym::para_fermion(i, false)); }
inline Element fdag(int i) { return Element::generator(GenSym::para_fermion(i, true)); }
inline Element kleinK() { return Element::generator(GenSym::klein(false)); }
inline Element kleinKdag() { return Element::generator(GenSym::klein(true)); }

inline Element oscillator(const ParaAlgebraSpec& spec, int mode, bool dagger) {
    if (mode < 1 || mode > spec.modes)
        throw std::out_of_range("mode index out of range: " + std::to_string(mode));
    return Element::generator(spec.oscillator(mode, dagger));
}

/// Green ansatz: each abstract oscillator becomes the sum of its p Green
/// components; Klein passes through. Extended multiplicatively and linearly,
/// so the result of a defining-relation input normal-forms to zero.
inline Element green_map(const Element& x, const ParaAlgebraSpec& spec) {
    Family want = spec.statistic == Statistic::Bose ? Family::ParaBoson
                                                    : Family::ParaFermion;
    Element result;
    for (const auto& [w, c] : x.terms()) {
        Element acc = Element::constant(c);
        for (GenSym s : w) {
            if (s.is_klein()) {
                acc *= Element::generator(s);
                continue;
            }
            if (s.is_green())
                throw std::invalid_argument("Green-level symbol in green_map input: " +
                                            to_string(s));
            if (s.family() != want)
                throw std::invalid_argument("statistic mismatch in green_map input: " +
                                            to_string(s));
            if (s.mode() > spec.modes)
                throw std::invalid_argument("mode out of range in green_map input: " +
                                            to_string(s));
            Element components;
            for (int a = 1; a <= spec.order; ++a) {
                GenSym g = spec.statistic == Statistic::Bose
                               ? GenSym::green_boson(s.mode(), a, s.dagger())
                               : GenSym::green_fermion(s.mode(), a, s.dagger());
                components += Element::generator(g);
            }
            acc *= components;
        }
        result += acc;
    }
    return result;
}

/// N_lm = ½{b_l†, b_m} (Bose) or ½[f_l†, f_m] (Fermi).
inline Element build_bilinear(int l, int m, const ParaAlgebraSpec& spec) {
    Element cr = oscillator(spec, l, true);
    Element an = oscillator(spec, m, false);
    if (spec.statistic == Statistic::Bose) return half() * anticommutator(cr, an);
    return half() * commutator(cr, an);
}

/// The number operator N = Σ_i N_ii (the linear u(n) Casimir).
inline Element number_operator(const ParaAlgebraSpec& spec) {
    Element n;
    for (int i = 1; i <= spec.modes; ++i) n += build_bilinear(i, i, spec);
    return n;
}

/// One defining relation, stored as LHS - RHS.
struct NamedRelation {
    std::string id;
    Element residue;
};

/// The trilinear defining relations, every line over every index triple.
/// Bose: [b_k,{b_l†,b_m}] = 2δ_kl b_m ; [b_k,{b_l†,b_m†}] = 2δ_kl b_m† + 2δ_km b_l† ;
///       [b_k,{b_l,b_m}] = 0. Fermi replaces the inner braces by brackets and
/// the second line's last sign by minus.
inline std::vector<NamedRelation> trilinear_relations(Statistic stat, int modes) {
    std::vector<NamedRelation> rels;
    bool bose = stat == Statistic::Bose;
    auto osc = [&](int i, bool dag) {
        return Element::generator(bose ? GenSym::para_boson(i, dag)
                                       : GenSym::para_fermion(i, dag));
    };
    auto inner = [&](const Element& x, const Element& y) {
        return bose ? anticommutator(x, y) : commutator(x, y);
    };
    auto name = [&](int line, int k, int l, int m) {
        return to_string(stat) + " trilinear L" + std::to_string(line) + " (" +
               std::to_string(k) + "," + std::to_string(l) + "," +
               std::to_string(m) + ")";
    };
    for (int k = 1; k <= modes; ++k) {
        for (int l = 1; l <= modes; ++l) {
            for (int m = 1; m <= modes; ++m) {
                Element r1 = commutator(osc(k, false), inner(osc(l, true), osc(m, false)));
                if (k == l) r1 -= Scalar(2) * osc(m, false);
                rels.push_back({name(1, k, l, m), r1});

                Element r2 = commutator(osc(k, false), inner(osc(l, true), osc(m, true)));
                if (k == l) r2 -= Scalar(2) * osc(m, true);
                if (k == m) r2 -= Scalar(bose ? 2 : -2) * osc(l, true);
                rels.push_back({name(2, k, l, m), r2});

                Element r3 = commutator(osc(k, false), inner(osc(l, false), osc(m, false)));
                rels.push_back({name(3, k, l, m), r3});
            }
        }
    }
    return rels;
}

/// The Klein relations: K K† = K† K = 1 and {K, b_i} = {K, b_i†} =
/// {K†, b_i} = {K†, b_i†} = 0.
inline std::vector<NamedRelation> klein_relations(int modes) {
    std::vector<NamedRelation> rels;
    Element K = kleinK(), Kd = kleinKdag(), unit = Element::one();
    rels.push_back({"K K~ - 1", K * Kd - unit});
    rels.push_back({"K~ K - 1", Kd * K - unit});
    for (int i = 1; i <= modes; ++i) {
        rels.push_back({"{K, b" + std::to_string(i) + "}", anticommutator(K, b(i))});
        rels.push_back({"{K, b" + std::to_string(i) + "'}", anticommutator(K, bdag(i))});
        rels.push_back({"{K~, b" + std::to_string(i) + "}", anticommutator(Kd, b(i))});
        rels.push_back({"{K~, b" + std::to_string(i) + "'}", anticommutator(Kd, bdag(i))});
    }
    return rels;
}

namespace detail {

inline void check_residues(Report& report, const std::vector<NamedRelation>& rels,
                           const ParaAlgebraSpec& spec, const RelationSystem& rs) {
    auto rows = parallel_map<CheckRecord>(rels.size(), [&](std::size_t i) {
        Element nf = normal_form(green_map(rels[i].residue, spec), rs);
        CheckRecord rec;
        rec.id = rels[i].id + " @p=" + std::to_string(spec.order);
        rec.pass = nf.empty();
        if (!rec.pass) rec.witness = to_string(nf);
        return rec;
    });
    for (auto& r : rows) report.add(std::move(r.id), r.pass, std::move(r.witness));
}

}  // namespace detail

/// Checks every trilinear relation instance through the Green map.
inline Report verify_trilinear(const ParaAlgebraSpec& spec, const RelationSystem& rs) {
    Stopwatch timer;
    Report report("trilinear " + spec.tag());
    detail::check_residues(report, trilinear_relations(spec.statistic, spec.modes),
                           spec, rs);
    report.set_elapsed_ms(timer.ms());
    return report;
}
inline Report verify_trilinear(const ParaAlgebraSpec& spec) {
    return verify_trilinear(spec, spec.backend());
}

/// Klein relations plus the number-operator commutators
/// [N, b_i†] = b_i†, [N, b_i] = -b_i. Parabosonic only.
inline Report verify_klein(const ParaAlgebraSpec& spec, const RelationSystem& rs) {
    if (spec.statistic != Statistic::Bose)
        throw std::invalid_argument("Klein operator is defined only for Bose statistic");
    Stopwatch timer;
    Report report("klein " + spec.tag());
    std::vector<NamedRelation> rels = klein_relations(spec.modes);
    Element N = number_operator(spec);
    for (int i = 1; i <= spec.modes; ++i) {
        rels.push_back({"[N, b" + std::to_string(i) + "'] - b" + std::to_string(i) + "'",
                        commutator(N, bdag(i)) - bdag(i)});
        rels.push_back({"[N, b" + std::to_string(i) + "] + b" + std::to_string(i),
                        commutator(N, b(i)) + b(i)});
    }
    detail::check_residues(report, rels, spec, rs);
    report.set_elapsed_ms(timer.ms());
    return report;
}
inline Report verify_klein(const ParaAlgebraSpec& spec) {
    return verify_klein(spec, spec.backend());
}

/// u(n) commutators of the bilinears: [N_kl, N_mq] = δ_lm N_kq - δ_kq N_ml
/// over all index 4-tuples.
inline Report verify_un_relations(const ParaAlgebraSpec& spec, const RelationSystem& rs) {
    Stopwatch timer;
    Report report("u(n) " + spec.tag());
    std::vector<NamedRelation> rels;
    int n = spec.modes;
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
            for (int m = 1; m <= n; ++m)
                for (int q = 1; q <= n; ++q) {
                    Element r = commutator(build_bilinear(k, l, spec),
                                           build_bilinear(m, q, spec));
                    if (l == m) r -= build_bilinear(k, q, spec);
                    if (k == q) r += build_bilinear(m, l, spec);
                    rels.push_back({"[N_" + std::to_string(k) + std::to_string(l) +
                                        ", N_" + std::to_string(m) + std::to_string(q) +
                                        "]",
                                    r});
                }
    detail::check_residues(report, rels, spec, rs);
    report.set_elapsed_ms(timer.ms());
    return report;
}
inline Report verify_un_relations(const ParaAlgebraSpec& spec) {
    return verify_un_relations(spec, spec.backend());
}

}  // namespace para
