#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segrecodes/gf.hpp"

using namespace segrecodes;

namespace {
const std::uint32_t kSupported[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};
}

TEST_CASE("make_field factors prime powers") {
    auto f5 = make_field(5);
    CHECK(f5->q() == 5);
    CHECK(f5->p() == 5);
    CHECK(f5->m() == 1);

    auto f4 = make_field(4);
    CHECK(f4->q() == 4);
    CHECK(f4->p() == 2);
    CHECK(f4->m() == 2);
    // x^2 + x + 1, the unique monic irreducible quadratic over GF(2).
    CHECK(f4->spec().modulus == std::vector<std::uint32_t>{1, 1, 1});

    CHECK_THROWS_AS(make_field(12), NotPrimePower);
    CHECK_THROWS_AS(make_field(1), NotPrimePower);
    CHECK_THROWS_AS(make_field(128), UnsupportedField);
}

TEST_CASE("make_field is deterministic") {
    for (std::uint32_t q : kSupported) {
        auto a = make_field(q);
        auto b = make_field(q);
        CHECK(a->spec() == b->spec());
    }
}

TEST_CASE("arith examples") {
    auto f3 = make_field(3);
    CHECK(f3->arith(2, 2, ArithKind::Add) == 1);

    // GF(4), codes encode c1*x + c0 as 2*c1 + c0: x * x = x + 1.
    auto f4 = make_field(4);
    CHECK(f4->arith(2, 2, ArithKind::Mul) == 3);

    auto f5 = make_field(5);
    CHECK(f5->arith(3, 2, ArithKind::Div) == 4);
    CHECK_THROWS_AS(f5->arith(3, 0, ArithKind::Div), DivisionByZero);
}

TEST_CASE("inv examples and brute-force oracle") {
    auto f7 = make_field(7);
    CHECK(f7->inv(1) == 1);
    CHECK(f7->inv(3) == 5);
    auto f4 = make_field(4);
    CHECK(f4->inv(2) == 3);
    CHECK_THROWS_AS(f4->inv(0), DivisionByZero);

    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
        auto f = make_field(q);
        for (std::uint32_t a = 1; a < q; ++a) {
            std::uint32_t found = 0;
            for (std::uint32_t b = 1; b < q; ++b)
                if (f->mul(a, b) == 1) found = b;
            CHECK(f->inv(a) == found);
        }
    }
}

TEST_CASE("enumerate_elements") {
    CHECK(make_field(3)->elements(true) == std::vector<std::uint32_t>{1, 2});
    CHECK(make_field(2)->elements() == std::vector<std::uint32_t>{0, 1});
    CHECK(make_field(4)->elements(true) == std::vector<std::uint32_t>{1, 2, 3});
}

TEST_CASE("field axioms, exhaustive for q <= 16") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        auto f = make_field(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("multiplicative group has order q - 1") {
    for (std::uint32_t q : kSupported) {
        auto f = make_field(q);
        for (std::uint32_t a = 1; a < q; ++a) CHECK(f->pow(a, q - 1) == 1);
    }
}

TEST_CASE("moduli are irreducible") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
        auto f = make_field(q);
        CHECK(poly_is_irreducible(f->p(), f->spec().modulus));
    }
    CHECK_FALSE(poly_is_irreducible(2, {0, 0, 1}));    // x^2
    CHECK_FALSE(poly_is_irreducible(2, {1, 0, 1}));    // x^2 + 1 = (x+1)^2
    CHECK(poly_is_irreducible(2, {1, 1, 1}));          // x^2 + x + 1
}

TEST_CASE("large prime fields use modular arithmetic") {
    auto f = make_field(1000003);
    CHECK(f->mul(1000002, 1000002) == 1); // (-1)^2
    CHECK(f->mul(123456, f->inv(123456)) == 1);
    CHECK(f->pow(2, 1000002) == 1);
}
