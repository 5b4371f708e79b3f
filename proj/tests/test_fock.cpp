#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "para/fock.hpp"

using namespace para;

TEST_CASE("basis enumeration") {
    FockBasis bose(ParaAlgebraSpec(Statistic::Bose, 1, 1), 2);
    REQUIRE(bose.size() == 3);  // 1, a', a'a'
    CHECK(bose.word(0).empty());
    CHECK(bose.word(1) == Word{GenSym::green_boson(1, 1, true)});
    CHECK(bose.word(2) ==
          Word{GenSym::green_boson(1, 1, true), GenSym::green_boson(1, 1, true)});

    FockBasis fermi(ParaAlgebraSpec(Statistic::Fermi, 1, 1), 2);
    CHECK(fermi.size() == 2);  // nilpotency caps the tower

    FockBasis fermi2(ParaAlgebraSpec(Statistic::Fermi, 1, 2), 2);
    CHECK(fermi2.size() == 4);  // 1, f.1', f.2', f.1'f.2'
}

TEST_CASE("Fermi basis counts match square-free subset enumeration") {
    // Independent oracle: square-free monomials in s symbols of length <= D
    // are just subsets of size <= D.
    auto binomial_sum = [](int s, int d) {
        long total = 0;
        for (unsigned mask = 0; mask < (1u << s); ++mask) {
            int bits = 0;
            for (int b = 0; b < s; ++b)
                if (mask & (1u << b)) ++bits;
            if (bits <= d) ++total;
        }
        return total;
    };
    for (int n : {1, 2})
        for (int p : {1, 2, 3})
            for (int d : {0, 1, 2, 3}) {
                FockBasis basis(ParaAlgebraSpec(Statistic::Fermi, n, p), d);
                REQUIRE(basis.size() ==
                        static_cast<std::size_t>(binomial_sum(n * p, d)));
            }
}

TEST_CASE("vacuum relation <0| a_i a_j' |0> = p δ_ij") {
    for (Statistic stat : {Statistic::Bose, Statistic::Fermi})
        for (int n : {1, 2, 3})
            for (int p : {1, 2, 3}) {
                ParaAlgebraSpec spec(stat, n, p);
                FockBasis basis(spec, 1);
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        Scalar got = vacuum_expectation(
                            oscillator(spec, i, false) * oscillator(spec, j, true),
                            basis);
                        INFO(spec.tag() << " (" << i << "," << j << ")");
                        REQUIRE(got == (i == j ? Scalar(p) : Scalar(0)));
                    }
            }
}

TEST_CASE("number operator vacuum eigenvalue") {
    // Bose: N|0> = (pn/2)|0> since each diagonal a a' contributes p/2.
    // Fermi: the antisymmetrized bilinear flips the sign, giving -pn/2.
    for (Statistic stat : {Statistic::Bose, Statistic::Fermi})
        for (int n : {1, 2})
            for (int p : {1, 2, 3}) {
                ParaAlgebraSpec spec(stat, n, p);
                FockBasis basis(spec, 2);
                RepMatrix N = represent(number_operator(spec), basis);
                Scalar want = stat == Statistic::Bose ? Scalar(n * p, 2)
                                                      : Scalar(-n * p, 2);
                INFO(spec.tag());
                REQUIRE(N.entry(0, 0) == want);
                // The vacuum column is pure: no excitation out of |0>.
                for (std::size_t r = 1; r < basis.size(); ++r)
                    REQUIRE(N.entry(r, 0) == 0);
            }
}

TEST_CASE("bilinear matrices satisfy the u(n) commutators at any cap") {
    for (int D : {1, 2}) {
        ParaAlgebraSpec spec(Statistic::Fermi, 2, 2);
        FockBasis basis(spec, D);
        auto N = [&](int l, int m) {
            return represent(build_bilinear(l, m, spec), basis);
        };
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l)
                for (int m = 1; m <= 2; ++m)
                    for (int q = 1; q <= 2; ++q) {
                        RepMatrix residue = N(k, l) * N(m, q) - N(m, q) * N(k, l);
                        if (l == m) residue = residue - Scalar(1) * N(k, q);
                        if (k == q) residue = residue + Scalar(1) * N(m, l);
                        REQUIRE(residue.entries().empty());
                        REQUIRE_FALSE(residue.any_overflow());
                    }
    }
}

TEST_CASE("parafermion creators are nilpotent of order p+1") {
    for (int p : {1, 2, 3}) {
        ParaAlgebraSpec spec(Statistic::Fermi, 1, p);
        FockBasis basis(spec, p + 1);
        Element power = Element::one();
        for (int k = 0; k < p + 1; ++k) power *= oscillator(spec, 1, true);
        RepMatrix m = represent(power, basis);
        INFO("p = " << p);
        CHECK(m.entries().empty());
        CHECK_FALSE(m.any_overflow());
        // One power lower is nonzero: the bound is sharp.
        Element lower = Element::one();
        for (int k = 0; k < p; ++k) lower *= oscillator(spec, 1, true);
        CHECK_FALSE(represent(lower, basis).entries().empty());
    }
}

TEST_CASE("represent is multiplicative away from overflow") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 60; ++it) {
        Statistic stat = (it % 2) ? Statistic::Fermi : Statistic::Bose;
        ParaAlgebraSpec spec(stat, 2, 2);
        FockBasis basis(spec, 3);
        auto rand_short = [&] {
            return gen::element_of(rng, 2, [&] {
                return gen::abstract_word(rng, stat, 2, 2, false);
            });
        };
        Element x = rand_short(), y = rand_short();
        RepMatrix lhs = represent(x * y, basis);
        RepMatrix rhs = represent(x, basis) * represent(y, basis);
        REQUIRE(lhs.equal_on_columns(rhs, [](std::size_t) { return true; }));
    }
}

TEST_CASE("creator columns at the cap overflow, and overflow is data") {
    ParaAlgebraSpec spec(Statistic::Bose, 1, 1);
    FockBasis basis(spec, 2);
    RepMatrix cre = represent(oscillator(spec, 1, true), basis);
    CHECK_FALSE(cre.column_overflowed(0));
    CHECK_FALSE(cre.column_overflowed(1));
    CHECK(cre.column_overflowed(2));  // a'·a'a'|0> leaves the space
    RepMatrix ann = represent(oscillator(spec, 1, false), basis);
    CHECK_FALSE(ann.any_overflow());
}

TEST_CASE("Klein has no Fock matrix") {
    FockBasis basis(ParaAlgebraSpec(Statistic::Bose, 1, 1), 1);
    CHECK_THROWS_AS(represent(kleinK(), basis), std::invalid_argument);
}

TEST_CASE("boson p=1 matrices coincide with the monomial-basis oracle") {
    ParaAlgebraSpec spec(Statistic::Bose, 2, 1);
    int cap = 3;
    FockBasis basis(spec, cap);
    oracle::BosonSpace sp(2, cap);
    REQUIRE(basis.size() == sp.dim());

    // Map each basis monomial to its occupation vector.
    auto occupation_index = [&](const Word& w) {
        std::vector<int> occ(2, 0);
        for (GenSym s : w) occ[static_cast<std::size_t>(s.mode() - 1)]++;
        return sp.index.at(occ);
    };

    for (const Element& op : {b(1), bdag(1), build_bilinear(1, 2, spec),
                              number_operator(spec)}) {
        RepMatrix mine = represent(op, basis);
        oracle::DenseMat theirs = oracle::boson_matrix(op, sp);
        for (std::size_t jcol = 0; jcol < basis.size(); ++jcol) {
            // The oracle truncates products at the cap; stay below it so
            // both sides are exact.
            if (static_cast<int>(basis.word(jcol).size()) > cap - 1) continue;
            if (mine.column_overflowed(jcol)) continue;
            for (std::size_t irow = 0; irow < basis.size(); ++irow) {
                REQUIRE(mine.entry(irow, jcol) ==
                        theirs.at(occupation_index(basis.word(irow)),
                                  occupation_index(basis.word(jcol))));
            }
        }
    }
}

TEST_CASE("fermion p=1 matrices coincide with the bit-basis oracle") {
    ParaAlgebraSpec spec(Statistic::Fermi, 3, 1);
    FockBasis basis(spec, 3);
    REQUIRE(basis.size() == 8);
    auto bit_index = [&](const Word& w) {
        unsigned mask = 0;
        for (GenSym s : w) mask |= 1u << (s.mode() - 1);
        return mask;
    };
    for (const Element& op :
         {f(2), fdag(1), build_bilinear(2, 3, spec), number_operator(spec)}) {
        RepMatrix mine = represent(op, basis);
        oracle::DenseMat theirs = oracle::fermion_matrix(op, 3);
        for (std::size_t jcol = 0; jcol < basis.size(); ++jcol)
            for (std::size_t irow = 0; irow < basis.size(); ++irow)
                REQUIRE(mine.entry(irow, jcol) ==
                        theirs.at(bit_index(basis.word(irow)),
                                  bit_index(basis.word(jcol))));
    }
}

TEST_CASE("representation-level verification of the bundled algebras") {
    Report r1 = verify_representation(lie_sl2(), ParaAlgebraSpec(Statistic::Bose, 3, 1), 3);
    INFO(r1.suite());
    CHECK(r1.all_passed());
    Report r2 = verify_representation(lie_so3(), ParaAlgebraSpec(Statistic::Fermi, 3, 2), 2);
    INFO(r2.suite());
    CHECK(r2.all_passed());
}

TEST_CASE("bracket residues survive a permuted basis ordering") {
    LieAlgebraSpec L = lie_sl2();
    ParaAlgebraSpec spec(Statistic::Bose, 3, 2);
    FockBasis standard(spec, 2);
    std::vector<Word> shuffled = standard.words();
    std::mt19937_64 rng(23);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    FockBasis permuted = FockBasis::with_word_order(spec, 2, shuffled);

    for (const FockBasis& basis : {standard, permuted}) {
        std::vector<RepMatrix> J;
        for (int i = 1; i <= 3; ++i)
            J.push_back(represent(js_map(i, L, Statistic::Bose), basis));
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                RepMatrix residue = J[static_cast<std::size_t>(i - 1)] * J[static_cast<std::size_t>(j - 1)] -
                                    J[static_cast<std::size_t>(j - 1)] * J[static_cast<std::size_t>(i - 1)];
                for (int k = 1; k <= 3; ++k) {
                    Scalar ck = L.c(i, j, k);
                    if (ck != 0) residue = residue - ck * J[static_cast<std::size_t>(k - 1)];
                }
                REQUIRE(residue.entries().empty());
            }
    }

    // And the matrices themselves agree up to the permutation.
    RepMatrix m_std = represent(js_map(1, L, Statistic::Bose), standard);
    RepMatrix m_perm = represent(js_map(1, L, Statistic::Bose), permuted);
    for (const auto& [key, v] : m_std.entries()) {
        std::size_t r = static_cast<std::size_t>(
            permuted.index_of(standard.word(key.first)));
        std::size_t c = static_cast<std::size_t>(
            permuted.index_of(standard.word(key.second)));
        REQUIRE(m_perm.entry(r, c) == v);
    }
}
