#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "para/lie.hpp"
#include "para/parastat.hpp"

namespace para {

/// Ordered basis of creation monomials of total degree <= cap acting on the
/// vacuum: graded by length, lexicographic by (mode, green) within a grade.
/// Index 0 is the vacuum (empty word). Fermi words are square-free.
class FockBasis {
  public:
    FockBasis(const ParaAlgebraSpec& spec, int degree_cap)
        : spec_(spec), cap_(degree_cap) {
        if (degree_cap < 0) throw std::invalid_argument("degree cap must be >= 0");
        std::vector<GenSym> creators;
        for (int m = 1; m <= spec.modes; ++m)
            for (int g = 1; g <= spec.order; ++g)
                creators.push_back(spec.statistic == Statistic::Bose
                                       ? GenSym::green_boson(m, g, true)
                                       : GenSym::green_fermion(m, g, true));
        std::sort(creators.begin(), creators.end(), by_mode_green);
        Word current;
        enumerate(creators, 0, current);
        std::sort(words_.begin(), words_.end(), [](const Word& a, const Word& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                by_mode_green);
        });
        for (std::size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = static_cast<int>(i);
    }

    /// Same basis set with an explicit word order (vacuum may sit anywhere);
    /// used to cross-check representation results against a reordering.
    static FockBasis with_word_order(const ParaAlgebraSpec& spec, int degree_cap,
                                     std::vector<Word> words) {
        FockBasis b(spec, degree_cap);
        if (words.size() != b.words_.size())
            throw std::invalid_argument("reordered basis has wrong size");
        std::map<Word, int> idx;
        for (std::size_t i = 0; i < words.size(); ++i) idx[words[i]] = static_cast<int>(i);
        if (idx.size() != words.size() ||
            !std::all_of(words.begin(), words.end(),
                         [&](const Word& w) { return b.index_.count(w) != 0; }))
            throw std::invalid_argument("reordered basis is not a permutation");
        b.words_ = std::move(words);
        b.index_ = std::move(idx);
        return b;
    }

    const ParaAlgebraSpec& spec() const { return spec_; }
    int degree_cap() const { return cap_; }
    std::size_t size() const { return words_.size(); }
    const Word& word(std::size_t i) const { return words_[i]; }
    const std::vector<Word>& words() const { return words_; }

    /// Basis position of a creation monomial, or -1 when absent.
    int index_of(const Word& w) const {
        auto it = index_.find(w);
        return it == index_.end() ? -1 : it->second;
    }

  private:
    static bool by_mode_green(GenSym a, GenSym b) {
        return std::pair(a.mode(), a.green()) < std::pair(b.mode(), b.green());
    }

    void enumerate(const std::vector<GenSym>& creators, std::size_t from, Word& current) {
        words_.push_back(current);
        if (static_cast<int>(current.size()) == cap_) return;
        for (std::size_t i = from; i < creators.size(); ++i) {
            current.push_back(creators[i]);
            // Bose monomials may repeat a creator, Fermi ones may not.
            enumerate(creators, spec_.statistic == Statistic::Bose ? i : i + 1, current);
            current.pop_back();
        }
    }

    ParaAlgebraSpec spec_;
    int cap_;
    std::vector<Word> words_;
    std::map<Word, int> index_;
};

/// Exact sparse matrix of an operator on a FockBasis. Columns whose image
/// sticks out above the degree cap are flagged as overflowed; overflow is
/// data, not an error, and flagged columns are excluded from exact checks.
class RepMatrix {
  public:
    RepMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), overflow_(cols, false) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void add(std::size_t r, std::size_t c, const Scalar& v) {
        if (v == 0) return;
        auto [it, inserted] = entries_.try_emplace({r, c}, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) entries_.erase(it);
        }
    }
    Scalar entry(std::size_t r, std::size_t c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Scalar(0) : it->second;
    }
    const std::map<std::pair<std::size_t, std::size_t>, Scalar>& entries() const {
        return entries_;
    }

    void mark_overflow(std::size_t col) { overflow_[col] = true; }
    bool column_overflowed(std::size_t col) const { return overflow_[col] != 0; }
    bool any_overflow() const {
        return std::any_of(overflow_.begin(), overflow_.end(),
                           [](char f) { return f != 0; });
    }

    friend RepMatrix operator+(const RepMatrix& a, const RepMatrix& b) {
        RepMatrix r = a;
        for (const auto& [k, v] : b.entries_) r.add(k.first, k.second, v);
        for (std::size_t c = 0; c < r.cols_; ++c)
            if (b.overflow_[c]) r.overflow_[c] = true;
        return r;
    }
    friend RepMatrix operator-(const RepMatrix& a, const RepMatrix& b) {
        return a + (Scalar(-1) * b);
    }
    friend RepMatrix operator*(const Scalar& s, RepMatrix a) {
        if (s == 0) a.entries_.clear();
        else
            for (auto& [k, v] : a.entries_) v *= s;
        return a;
    }
    /// Matrix product; a column of the result is overflowed when its source
    /// column is, or when it routes through an overflowed column of a.
    friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        RepMatrix r(a.rows_, b.cols_);
        std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> a_by_col;
        for (const auto& [k, v] : a.entries_) a_by_col[k.second].emplace_back(k.first, v);
        for (const auto& [k, v] : b.entries_) {
            auto [mid, col] = k;
            if (a.overflow_[mid]) r.overflow_[col] = true;
            auto it = a_by_col.find(mid);
            if (it == a_by_col.end()) continue;
            for (const auto& [row, av] : it->second) r.add(row, col, av * v);
        }
        for (std::size_t c = 0; c < b.cols_; ++c)
            if (b.overflow_[c]) r.overflow_[c] = true;
        return r;
    }

    /// Exact equality on the columns accepted by keep (overflowed columns
    /// of either side are skipped).
    template <typename Keep>
    bool equal_on_columns(const RepMatrix& other, Keep&& keep) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) return false;
        auto live = [&](const RepMatrix& m, std::size_t c) {
            return keep(c) && !m.overflow_[c];
        };
        for (const auto& [k, v] : entries_)
            if (live(*this, k.second) && live(other, k.second) &&
                other.entry(k.first, k.second) != v)
                return false;
        for (const auto& [k, v] : other.entries_)
            if (live(*this, k.second) && live(other, k.second) &&
                entry(k.first, k.second) != v)
                return false;
        return true;
    }
    bool is_zero_on_columns(const std::vector<std::size_t>& cols) const {
        for (std::size_t c : cols) {
            if (overflow_[c]) return false;
        }
        for (const auto& [k, v] : entries_)
            if (std::find(cols.begin(), cols.end(), k.second) != cols.end() && v != 0)
                return false;
        return true;
    }

  private:
    std::size_t rows_, cols_;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> entries_;
    std::vector<char> overflow_;
};

/// Matrix of an abstract element x on the truncated Fock space: column j is
/// normal_form(green_map(x) · basis_j) expanded in creation monomials, with
/// any word still holding an annihilator killed by the vacuum. Klein symbols
/// have no rational vacuum action and are rejected.
inline RepMatrix represent(const Element& x, const FockBasis& basis) {
    const ParaAlgebraSpec& spec = basis.spec();
    for (const auto& [w, c] : x.terms())
        for (GenSym s : w)
            if (s.is_klein())
                throw std::invalid_argument("Klein symbol has no Fock matrix");
    Element op = green_map(x, spec);
    RelationSystem rs = spec.backend();
    RepMatrix m(basis.size(), basis.size());

    auto cols = parallel_map<std::vector<std::pair<int, Scalar>>>(
        basis.size(), [&](std::size_t j) {
            std::vector<std::pair<int, Scalar>> col;
            Element image = normal_form(op * Element::from_word(basis.word(j)), rs);
            for (const auto& [w, c] : image.terms()) {
                bool killed = false;
                for (GenSym s : w)
                    if (!s.dagger()) {
                        killed = true;  // annihilator meets the vacuum
                        break;
                    }
                if (killed) continue;
                int row = basis.index_of(w);
                col.emplace_back(row, c);  // row -1 marks overflow
            }
            return col;
        });
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (auto& [row, c] : cols[j]) {
            if (row < 0) m.mark_overflow(j);
            else m.add(static_cast<std::size_t>(row), j, c);
        }
    return m;
}

inline Scalar vacuum_expectation(const Element& x, const FockBasis& basis) {
    return represent(x, basis).entry(0, 0);
}

/// Representation-level verification: exact matrix brackets for the
/// Jordan-Schwinger images on the whole truncated space, and the adjoint
/// tensor-operator identities on columns of degree <= cap-1, where the
/// degree-shifting oscillator matrices are truncation-exact.
inline Report verify_representation(const LieAlgebraSpec& L, const ParaAlgebraSpec& spec,
                                    int degree_cap) {
    if (spec.modes != L.dimension())
        throw std::invalid_argument("oscillator modes must equal Lie dimension");
    if (degree_cap < 2) throw std::invalid_argument("degree cap must be >= 2");
    Stopwatch timer;
    Report report("fock dim=" + std::to_string(L.dimension()) + " " + spec.tag() +
                  " D=" + std::to_string(degree_cap));
    FockBasis basis(spec, degree_cap);
    int n = L.dimension();

    std::vector<RepMatrix> J;
    J.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        J.push_back(represent(js_map(i, L, spec.statistic), basis));
    for (int i = 1; i <= n; ++i)
        report.add("J(" + L.name(i) + ") truncation-exact",
                   !J[static_cast<std::size_t>(i - 1)].any_overflow());

    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) pairs.emplace_back(i, j);
    auto bracket_rows = parallel_map<CheckRecord>(pairs.size(), [&](std::size_t idx) {
        auto [i, j] = pairs[idx];
        RepMatrix residue = J[static_cast<std::size_t>(i - 1)] * J[static_cast<std::size_t>(j - 1)] -
                            J[static_cast<std::size_t>(j - 1)] * J[static_cast<std::size_t>(i - 1)];
        for (int k = 1; k <= n; ++k) {
            Scalar ck = L.c(i, j, k);
            if (ck != 0) residue = residue - ck * J[static_cast<std::size_t>(k - 1)];
        }
        CheckRecord rec;
        rec.id = "bracket [J(" + L.name(i) + "), J(" + L.name(j) + ")]";
        rec.pass = residue.entries().empty() && !residue.any_overflow();
        return rec;
    });
    for (auto& r : bracket_rows) report.add(std::move(r.id), r.pass, std::move(r.witness));

    // Safe columns for the degree-shifting oscillator identities.
    std::vector<std::size_t> safe;
    for (std::size_t c = 0; c < basis.size(); ++c)
        if (static_cast<int>(basis.word(c).size()) <= degree_cap - 1) safe.push_back(c);

    std::vector<RepMatrix> ann, cre;
    for (int j = 1; j <= n; ++j) {
        ann.push_back(represent(oscillator(spec, j, false), basis));
        cre.push_back(represent(oscillator(spec, j, true), basis));
    }
    auto tensor_rows = parallel_map<std::array<CheckRecord, 2>>(pairs.size(), [&](std::size_t idx) {
        auto [i, j] = pairs[idx];
        const RepMatrix& Ji = J[static_cast<std::size_t>(i - 1)];
        std::array<CheckRecord, 2> out;
        RepMatrix r1 = Ji * ann[static_cast<std::size_t>(j - 1)] -
                       ann[static_cast<std::size_t>(j - 1)] * Ji;
        for (int k = 1; k <= n; ++k) {
            Scalar ck = L.c(i, j, k);
            if (ck != 0) r1 = r1 - ck * ann[static_cast<std::size_t>(k - 1)];
        }
        out[0] = {"matrix [J(" + L.name(i) + "), a_" + std::to_string(j) + "]",
                  r1.is_zero_on_columns(safe), ""};
        RepMatrix r2 = Ji * cre[static_cast<std::size_t>(j - 1)] -
                       cre[static_cast<std::size_t>(j - 1)] * Ji;
        for (int k = 1; k <= n; ++k) {
            Scalar ck = L.c(i, k, j);
            if (ck != 0) r2 = r2 + ck * cre[static_cast<std::size_t>(k - 1)];
        }
        out[1] = {"matrix [J(" + L.name(i) + "), a_" + std::to_string(j) + "']",
                  r2.is_zero_on_columns(safe), ""};
        return out;
    });
    for (auto& row : tensor_rows)
        for (auto& rec : row) report.add(std::move(rec.id), rec.pass, std::move(rec.witness));

    report.set_elapsed_ms(timer.ms());
    return report;
}

}  // namespace para
