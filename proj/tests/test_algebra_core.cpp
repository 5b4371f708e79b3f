#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"
#include "para/element.hpp"
#include "para/grading.hpp"
#include "para/parastat.hpp"
#include "para/tensor.hpp"

using namespace para;

TEST_CASE("scalar canonicity") {
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    Scalar q = Scalar(3) / Scalar(-6);
    CHECK(q == Scalar(-1, 2));
    CHECK(denominator(q) == 2);  // denominator stays positive
    CHECK(numerator(q) == -1);
    CHECK(Scalar(1, 3) + Scalar(1, 6) == Scalar(1, 2));
}

TEST_CASE("element addition") {
    Word w{GenSym::para_boson(1, false)};
    Element two_w = Element::from_word(w, Scalar(2));
    Element three_w = Element::from_word(w, Scalar(3));
    CHECK(two_w + three_w == Element::from_word(w, Scalar(5)));

    Element x = b(1) * bdag(2);
    CHECK(x + Element::zero() == x);
    CHECK(Element::from_word(w) + Element::from_word(w, Scalar(-1)) == Element::zero());
    CHECK((Element::from_word(w) - Element::from_word(w)).empty());
}

TEST_CASE("element multiplication") {
    Element u = Element::from_word({GenSym::para_boson(1, true)}, Scalar(2));
    Element v = Element::from_word({GenSym::para_boson(2, false)}, Scalar(3));
    Element uv = u * v;
    REQUIRE(uv.size() == 1);
    CHECK(uv.coeff({GenSym::para_boson(1, true), GenSym::para_boson(2, false)}) == 6);

    Element x = b(1) * b(2) + bdag(1);
    CHECK(Element::one() * x == x);
    CHECK(x * Element::one() == x);
    CHECK((b(1) + b(2)) * bdag(1) == b(1) * bdag(1) + b(2) * bdag(1));
}

TEST_CASE("abstract and Green symbols never mix in one element") {
    Element abstract = b(1);
    Element green = Element::generator(GenSym::green_boson(1, 1, false));
    CHECK_THROWS_AS(abstract + green, std::invalid_argument);
    CHECK_THROWS_AS(abstract * green, std::invalid_argument);
    // Klein is level-neutral and combines with either.
    CHECK_NOTHROW(abstract * kleinK());
    CHECK_NOTHROW(green * kleinK());
}

TEST_CASE("plain tensor product") {
    TensorElement lhs = TensorElement::pure(b(1), Element::one(), TensorMode::Plain);
    TensorElement rhs = TensorElement::pure(Element::one(), b(1), TensorMode::Plain);
    CHECK(tensor_mul(lhs, rhs) ==
          TensorElement::pure(b(1), b(1), TensorMode::Plain));
}

TEST_CASE("graded tensor product signs") {
    TensorElement one_b1 = TensorElement::pure(Element::one(), b(1), TensorMode::Graded);
    TensorElement b2_one = TensorElement::pure(b(2), Element::one(), TensorMode::Graded);
    // deg(b1) = deg(b2) = 1, so the factors cross with a minus sign.
    CHECK(tensor_mul(one_b1, b2_one) ==
          Scalar(-1) * TensorElement::pure(b(2), b(1), TensorMode::Graded));

    TensorElement one_K = TensorElement::pure(Element::one(), kleinK(), TensorMode::Graded);
    TensorElement b1_one = TensorElement::pure(b(1), Element::one(), TensorMode::Graded);
    // deg(K) = 0: no sign.
    CHECK(tensor_mul(one_K, b1_one) ==
          TensorElement::pure(b(1), kleinK(), TensorMode::Graded));
}

TEST_CASE("tensor mode mismatch is an error") {
    TensorElement plain = TensorElement::one(TensorMode::Plain);
    TensorElement graded = TensorElement::one(TensorMode::Graded);
    CHECK_THROWS_AS(tensor_mul(plain, graded), std::invalid_argument);
    CHECK_THROWS_AS(plain + graded, std::invalid_argument);
}

TEST_CASE("word degree") {
    Grading g = Grading::standard();
    CHECK(degree(Word{}, g) == 0);
    CHECK(degree(Word{GenSym::para_boson(1, false), GenSym::para_boson(2, true)}, g) == 0);
    CHECK(degree(Word{GenSym::para_boson(1, false), GenSym::klein(false)}, g) == 1);
}

TEST_CASE("free algebra laws on random elements") {
    std::mt19937_64 rng(7);
    auto rand_elem = [&] {
        return gen::element_of(rng, 4, [&] {
            return gen::abstract_word(rng, Statistic::Bose, 3, 5, true);
        });
    };
    for (int it = 0; it < 200; ++it) {
        Element x = rand_elem(), y = rand_elem(), z = rand_elem();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * Element::one() == x);
        CHECK(Element::one() * x == x);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(z * (x + y) == z * x + z * y);
    }
}

TEST_CASE("tensor product associativity on random elements") {
    std::mt19937_64 rng(11);
    for (TensorMode mode : {TensorMode::Plain, TensorMode::Graded}) {
        auto rand_tensor = [&] {
            TensorElement t(mode);
            std::uniform_int_distribution<int> terms(0, 3);
            int n = terms(rng);
            for (int i = 0; i < n; ++i)
                t.add_term(gen::abstract_word(rng, Statistic::Bose, 2, 3, true),
                           gen::abstract_word(rng, Statistic::Bose, 2, 3, true),
                           gen::small_scalar(rng));
            return t;
        };
        for (int it = 0; it < 150; ++it) {
            TensorElement x = rand_tensor(), y = rand_tensor(), z = rand_tensor();
            CHECK(tensor_mul(tensor_mul(x, y), z) == tensor_mul(x, tensor_mul(y, z)));
        }
    }
}

TEST_CASE("graded product with an all-even grading degenerates to plain") {
    std::mt19937_64 rng(13);
    Grading even = Grading::all_even();
    for (int it = 0; it < 150; ++it) {
        TensorElement gx(TensorMode::Graded), gy(TensorMode::Graded);
        TensorElement px(TensorMode::Plain), py(TensorMode::Plain);
        std::uniform_int_distribution<int> terms(0, 3);
        for (int i = 0, n = terms(rng); i < n; ++i) {
            Word l = gen::abstract_word(rng, Statistic::Bose, 2, 3, true);
            Word r = gen::abstract_word(rng, Statistic::Bose, 2, 3, true);
            Scalar c = gen::small_scalar(rng);
            gx.add_term(l, r, c);
            px.add_term(l, r, c);
        }
        for (int i = 0, n = terms(rng); i < n; ++i) {
            Word l = gen::abstract_word(rng, Statistic::Bose, 2, 3, true);
            Word r = gen::abstract_word(rng, Statistic::Bose, 2, 3, true);
            Scalar c = gen::small_scalar(rng);
            gy.add_term(l, r, c);
            py.add_term(l, r, c);
        }
        TensorElement graded = tensor_mul(gx, gy, even);
        TensorElement plain = tensor_mul(px, py);
        REQUIRE(graded.terms() == plain.terms());
    }
}
