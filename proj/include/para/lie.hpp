#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "para/hopf.hpp"
#include "para/parastat.hpp"

namespace para {

/// A finite-dimensional Lie algebra given by structure constants c_ij^k in
/// some basis: [X_i, X_j] = Σ_k c_ij^k X_k. Antisymmetry in (i, j) is
/// enforced at load; the Jacobi identity is checked by jacobi_check.
class LieAlgebraSpec {
  public:
    struct Entry {
        int i, j, k;
        Scalar value;
    };

    LieAlgebraSpec(int dim, std::vector<std::string> names, const std::vector<Entry>& entries)
        : dim_(dim), names_(std::move(names)) {
        if (dim < 1) throw std::invalid_argument("Lie algebra dimension must be >= 1");
        if (!names_.empty() && static_cast<int>(names_.size()) != dim)
            throw std::invalid_argument("basis name count does not match dimension");
        for (const auto& e : entries) insert(e.i, e.j, e.k, e.value);
    }

    int dimension() const { return dim_; }

    std::string name(int i) const {
        if (!names_.empty()) return names_[static_cast<std::size_t>(i - 1)];
        return "X" + std::to_string(i);
    }

    Scalar c(int i, int j, int k) const {
        auto it = constants_.find({i, j, k});
        return it == constants_.end() ? Scalar(0) : it->second;
    }

    const std::map<std::tuple<int, int, int>, Scalar>& constants() const {
        return constants_;
    }

  private:
    void insert(int i, int j, int k, const Scalar& v) {
        auto in_range = [&](int x) { return x >= 1 && x <= dim_; };
        if (!in_range(i) || !in_range(j) || !in_range(k))
            throw std::invalid_argument("structure constant index out of range");
        if (v == 0) return;
        if (i == j)
            throw std::invalid_argument("nonzero c_ii^k violates antisymmetry");
        auto put = [&](int a, int b, const Scalar& val) {
            auto [it, inserted] = constants_.try_emplace({a, b, k}, val);
            if (!inserted && it->second != val)
                throw std::invalid_argument("conflicting structure constant entries");
        };
        put(i, j, v);
        put(j, i, -v);
    }

    int dim_;
    std::vector<std::string> names_;
    std::map<std::tuple<int, int, int>, Scalar> constants_;
};

/// Raw constants table, one Scalar per (i, j, k). Antisymmetry is NOT
/// assumed here: the mutation gate bumps single entries of such a table,
/// which a LieAlgebraSpec could not even represent.
using ConstantsTable = std::map<std::tuple<int, int, int>, Scalar>;

namespace detail {

/// Walks every Jacobi 4-tuple of a dense table, invoking
/// on_tuple(i, j, k, m, sum); a false return stops the scan.
template <typename OnTuple>
void jacobi_scan(int n, const ConstantsTable& table, OnTuple&& on_tuple) {
    // Dense copy: the 4-tuple loop touches entries far too often for map
    // lookups.
    std::vector<Scalar> c(static_cast<std::size_t>(n) * n * n, Scalar(0));
    auto at = [n, &c](int i, int j, int k) -> Scalar& {
        return c[static_cast<std::size_t>((i - 1) * n + (j - 1)) * n + (k - 1)];
    };
    for (const auto& [key, v] : table) {
        auto [i, j, k] = key;
        at(i, j, k) = v;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int m = 1; m <= n; ++m) {
                    Scalar sum(0);
                    for (int p = 1; p <= n; ++p)
                        sum += at(i, j, p) * at(p, k, m) + at(j, k, p) * at(p, i, m) +
                               at(k, i, p) * at(p, j, m);
                    if (!on_tuple(i, j, k, m, sum)) return;
                }
}

}  // namespace detail

/// Cyclic Jacobi sums over every index 4-tuple of a raw table; failures
/// name the tuple.
inline Report jacobi_check_table(int n, const ConstantsTable& table) {
    Stopwatch timer;
    Report report("jacobi dim=" + std::to_string(n));
    detail::jacobi_scan(n, table, [&](int i, int j, int k, int m, const Scalar& sum) {
        report.add("jacobi (" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(k) + ";" + std::to_string(m) + ")",
                   sum == 0, sum == 0 ? "" : pretty_string(sum));
        return true;
    });
    report.set_elapsed_ms(timer.ms());
    return report;
}

inline Report jacobi_check(const LieAlgebraSpec& L) {
    return jacobi_check_table(L.dimension(), L.constants());
}

/// The first violating tuple (i, j, k; m), if any. Cheap enough for the
/// mutation gate, which scans hundreds of perturbed tables.
inline std::optional<std::array<int, 4>> first_jacobi_violation(
    int n, const ConstantsTable& table) {
    std::optional<std::array<int, 4>> found;
    detail::jacobi_scan(n, table, [&](int i, int j, int k, int m, const Scalar& sum) {
        if (sum == 0) return true;
        found = {i, j, k, m};
        return false;
    });
    return found;
}

/// The paraparticle Jordan-Schwinger image J(X_i) = Σ_{kl} c_ki^l N_kl,
/// an abstract element over dim(L) oscillator modes.
inline Element js_map(int i, const LieAlgebraSpec& L, Statistic stat) {
    int n = L.dimension();
    if (i < 1 || i > n)
        throw std::out_of_range("generator index out of range: " + std::to_string(i));
    ParaAlgebraSpec spec(stat, n, 1);  // bilinears are order-independent
    Element out;
    for (const auto& [key, v] : L.constants()) {
        auto [k, ii, l] = key;
        if (ii != i) continue;
        out += v * build_bilinear(k, l, spec);
    }
    return out;
}

/// [J(X_i), J(X_j)] = Σ_k c_ij^k J(X_k) under the Green map at spec.order.
inline Report verify_lie_homomorphism(const LieAlgebraSpec& L,
                                      const ParaAlgebraSpec& spec) {
    if (spec.modes != L.dimension())
        throw std::invalid_argument("oscillator modes must equal Lie dimension");
    Stopwatch timer;
    Report report("lie homomorphism dim=" + std::to_string(L.dimension()) + " " +
                  spec.tag());
    int n = L.dimension();
    std::vector<Element> J(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) J[static_cast<std::size_t>(i)] = js_map(i, L, spec.statistic);
    RelationSystem rs = spec.backend();

    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) pairs.emplace_back(i, j);

    auto rows = parallel_map<CheckRecord>(pairs.size(), [&](std::size_t idx) {
        auto [i, j] = pairs[idx];
        Element residue = commutator(J[static_cast<std::size_t>(i)],
                                     J[static_cast<std::size_t>(j)]);
        for (int k = 1; k <= n; ++k) {
            Scalar ck = L.c(i, j, k);
            if (ck != 0) residue -= ck * J[static_cast<std::size_t>(k)];
        }
        Element nf = normal_form(green_map(residue, spec), rs);
        CheckRecord rec;
        rec.id = "[J(" + L.name(i) + "), J(" + L.name(j) + ")]";
        rec.pass = nf.empty();
        if (!rec.pass) rec.witness = to_string(nf);
        return rec;
    });
    for (auto& r : rows) report.add(std::move(r.id), r.pass, std::move(r.witness));
    report.set_elapsed_ms(timer.ms());
    return report;
}

/// The commuting diagrams: Δ(J(X_i)) primitive, ε(J(X_i)) = 0,
/// S(J(X_i)) = -J(X_i), all modulo (tensor) normal form.
inline Report verify_hopf_homomorphism(const LieAlgebraSpec& L,
                                       const ParaAlgebraSpec& spec,
                                       const HopfStructure& h) {
    if (spec.modes != L.dimension())
        throw std::invalid_argument("oscillator modes must equal Lie dimension");
    if (h.statistic() != spec.statistic)
        throw std::invalid_argument("Hopf variant does not match statistic");
    Stopwatch timer;
    Report report("hopf homomorphism " + to_string(h.variant()) + " dim=" +
                  std::to_string(L.dimension()) + " " + spec.tag());
    RelationSystem rs = spec.backend();
    for (int i = 1; i <= L.dimension(); ++i) {
        Element Ji = js_map(i, L, spec.statistic);
        std::string gen = "J(" + L.name(i) + ")";

        TensorElement residue = coproduct(Ji, h) -
                                TensorElement::pure(Ji, Element::one(), h.tensor_mode()) -
                                TensorElement::pure(Element::one(), Ji, h.tensor_mode());
        report.add("delta(" + gen + ") primitive", tensor_vanishes(residue, spec, spec));

        Scalar e = counit(Ji, h);
        report.add("epsilon(" + gen + ") = 0", e == 0, e == 0 ? "" : pretty_string(e));

        Element s = normal_form(green_map(antipode(Ji, h) + Ji, spec), rs);
        report.add("antipode(" + gen + ") = -" + gen, s.empty(),
                   s.empty() ? "" : to_string(s));
    }
    report.set_elapsed_ms(timer.ms());
    return report;
}

/// Adjoint tensor-operator relations for the oscillators:
///   [J(X_i), a_j]  = Σ_k c_ij^k a_k        (covariant annihilators)
///   [J(X_i), a_j†] = -Σ_k c_ik^j a_k†      (contravariant creators)
/// The annihilator line carries the sign forced by the defining trilinear
/// relations; verify_tensor_covariance_sign_flips documents that the
/// opposite convention fails.
inline Report verify_tensor_operators(const LieAlgebraSpec& L,
                                      const ParaAlgebraSpec& spec) {
    if (spec.modes != L.dimension())
        throw std::invalid_argument("oscillator modes must equal Lie dimension");
    Stopwatch timer;
    Report report("tensor operators dim=" + std::to_string(L.dimension()) + " " +
                  spec.tag());
    int n = L.dimension();
    RelationSystem rs = spec.backend();
    std::vector<Element> J(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) J[static_cast<std::size_t>(i)] = js_map(i, L, spec.statistic);

    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) pairs.emplace_back(i, j);

    auto rows = parallel_map<std::array<CheckRecord, 2>>(pairs.size(), [&](std::size_t idx) {
        auto [i, j] = pairs[idx];
        const Element& Ji = J[static_cast<std::size_t>(i)];
        std::array<CheckRecord, 2> out;

        Element covariant = commutator(Ji, oscillator(spec, j, false));
        for (int k = 1; k <= n; ++k) {
            Scalar ck = L.c(i, j, k);
            if (ck != 0) covariant -= ck * oscillator(spec, k, false);
        }
        Element nf1 = normal_form(green_map(covariant, spec), rs);
        out[0] = {"[J(" + L.name(i) + "), a_" + std::to_string(j) + "]", nf1.empty(),
                  nf1.empty() ? "" : to_string(nf1)};

        Element contravariant = commutator(Ji, oscillator(spec, j, true));
        for (int k = 1; k <= n; ++k) {
            Scalar ck = L.c(i, k, j);
            if (ck != 0) contravariant += ck * oscillator(spec, k, true);
        }
        Element nf2 = normal_form(green_map(contravariant, spec), rs);
        out[1] = {"[J(" + L.name(i) + "), a_" + std::to_string(j) + "']", nf2.empty(),
                  nf2.empty() ? "" : to_string(nf2)};
        return out;
    });
    for (auto& row : rows)
        for (auto& rec : row) report.add(std::move(rec.id), rec.pass, std::move(rec.witness));
    report.set_elapsed_ms(timer.ms());
    return report;
}

// Bundled algebras, all with integer structure constants.

/// so(3): c_ij^k = ε_ijk.
inline LieAlgebraSpec lie_so3() {
    using E = LieAlgebraSpec::Entry;
    return LieAlgebraSpec(3, {"L1", "L2", "L3"},
                          {E{1, 2, 3, Scalar(1)}, E{2, 3, 1, Scalar(1)},
                           E{3, 1, 2, Scalar(1)}});
}

/// sl(2) in the Chevalley basis (E, F, H): [E,F]=H, [H,E]=2E, [H,F]=-2F.
inline LieAlgebraSpec lie_sl2() {
    using E = LieAlgebraSpec::Entry;
    return LieAlgebraSpec(3, {"E", "F", "H"},
                          {E{1, 2, 3, Scalar(1)}, E{3, 1, 1, Scalar(2)},
                           E{3, 2, 2, Scalar(-2)}});
}

/// sl(3) in the Chevalley basis (e1,e2,e3,f1,f2,f3,h1,h2) with
/// e3 = [e1,e2], f3 = -[f1,f2]; all brackets have integer coefficients.
inline LieAlgebraSpec lie_sl3() {
    using E = LieAlgebraSpec::Entry;
    std::vector<E> entries = {
        // [e_i, f_j]
        E{1, 4, 7, Scalar(1)},                        // [e1,f1] = h1
        E{2, 5, 8, Scalar(1)},                        // [e2,f2] = h2
        E{3, 6, 7, Scalar(1)}, E{3, 6, 8, Scalar(1)}, // [e3,f3] = h1 + h2
        E{1, 6, 5, Scalar(-1)},                       // [e1,f3] = -f2
        E{2, 6, 4, Scalar(1)},                        // [e2,f3] = f1
        E{3, 4, 2, Scalar(-1)},                       // [e3,f1] = -e2
        E{3, 5, 1, Scalar(1)},                        // [e3,f2] = e1
        // root-string brackets
        E{1, 2, 3, Scalar(1)},                        // [e1,e2] = e3
        E{4, 5, 6, Scalar(-1)},                       // [f1,f2] = -f3
        // Cartan action
        E{7, 1, 1, Scalar(2)},  E{7, 2, 2, Scalar(-1)}, E{7, 3, 3, Scalar(1)},
        E{7, 4, 4, Scalar(-2)}, E{7, 5, 5, Scalar(1)},  E{7, 6, 6, Scalar(-1)},
        E{8, 1, 1, Scalar(-1)}, E{8, 2, 2, Scalar(2)},  E{8, 3, 3, Scalar(1)},
        E{8, 4, 4, Scalar(1)},  E{8, 5, 5, Scalar(-2)}, E{8, 6, 6, Scalar(-1)},
    };
    return LieAlgebraSpec(8, {"e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2"},
                          entries);
}

/// Abelian algebra: all brackets vanish.
inline LieAlgebraSpec lie_abelian(int dim) {
    std::vector<std::string> names;
    for (int i = 1; i <= dim; ++i) names.push_back("A" + std::to_string(i));
    return LieAlgebraSpec(dim, std::move(names), {});
}

}  // namespace para
