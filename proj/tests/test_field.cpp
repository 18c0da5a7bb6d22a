#include <numeric>
#include <random>

#include "doctest.h"
#include "field.hpp"

using namespace tc;

namespace {

// Independent order oracle: repeated multiplication, no log tables.
std::uint32_t order_by_iteration(const Field& f, std::uint32_t x) {
    std::uint32_t cur = x;
    std::uint32_t t = 1;
    while (cur != 1) {
        cur = f.mul(cur, x);
        ++t;
        REQUIRE(t <= f.q());
    }
    return t;
}

}  // namespace

TEST_CASE("prime and prime power helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(1048573));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));
    CHECK(prime_power_split(8) == std::pair<std::uint32_t, std::uint32_t>{2, 3});
    CHECK(prime_power_split(9) == std::pair<std::uint32_t, std::uint32_t>{3, 2});
    CHECK(prime_power_split(7) == std::pair<std::uint32_t, std::uint32_t>{7, 1});
    CHECK_THROWS_AS(prime_power_split(6), Error);
    CHECK_THROWS_AS(prime_power_split(12), Error);
    CHECK_THROWS_AS(prime_power_split(1), Error);
}

TEST_CASE("field construction picks the smallest irreducible modulus") {
    Field f2(2, 1);
    CHECK(f2.q() == 2);
    CHECK(f2.modulus() == poly::Poly{0, 1});  // x; any degree-1 monic works

    Field f4(2, 2);
    CHECK(f4.q() == 4);
    CHECK(f4.modulus() == poly::Poly{1, 1, 1});  // the only irreducible quadratic

    // Low-degree-first tuple order: (1,0,1) is the first irreducible cubic.
    Field f8(2, 3);
    CHECK(f8.modulus() == poly::Poly{1, 0, 1, 1});

    Field f9(3, 2);
    CHECK(f9.q() == 9);
    CHECK(poly::is_irreducible(f9.modulus(), 3));
}

TEST_CASE("field construction errors") {
    CHECK_THROWS_AS(Field(4, 1), Error);   // non-prime
    CHECK_THROWS_AS(Field(2, 0), Error);   // degree out of range
    CHECK_THROWS_AS(Field(2, 21), Error);  // 2^21 above the scalar guard
    CHECK_THROWS_AS(Field(2, 2, poly::Poly{1, 0, 1}), Error);  // x^2+1 reducible
    CHECK_THROWS_AS(Field(2, 2, poly::Poly{1, 1}), Error);     // wrong degree
}

TEST_CASE("arithmetic examples in small fields") {
    Field f2(2, 1);
    CHECK(f2.add(1, 1) == 0);

    Field f4(2, 2);
    // x has code 2; x*x = x+1 (code 3) by the modulus.
    CHECK(f4.mul(2, 2) == 3);

    // inv(x) by exhaustive search.
    std::uint32_t inv_x = 0;
    for (std::uint32_t y = 1; y < 4; ++y) {
        if (f4.mul(2, y) == 1) inv_x = y;
    }
    CHECK(inv_x == 3);
    CHECK(f4.inv(2) == inv_x);
}

TEST_CASE("element orders") {
    Field f4(2, 2);
    CHECK(f4.order(1) == 1);
    CHECK(f4.order(2) == 3);  // a generator of F_4^*
    CHECK(f4.order(3) == 3);

    Field f8(2, 3);
    for (std::uint32_t x = 1; x < 8; ++x) {
        const std::uint32_t o = f8.order(x);
        CHECK((o == 1 || o == 7));
        CHECK(o == order_by_iteration(f8, x));
    }

    // F_9 has a cyclic multiplicative group of order 8: verified exhaustively.
    Field f9(3, 2);
    std::uint32_t max_order = 0;
    for (std::uint32_t x = 1; x < 9; ++x) {
        const std::uint32_t o = order_by_iteration(f9, x);
        CHECK(f9.order(x) == o);
        CHECK(8 % o == 0);
        max_order = std::max(max_order, o);
    }
    CHECK(max_order == 8);
}

TEST_CASE("field axioms hold") {
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 1},
                        {2, 2},
                        {2, 3},
                        {2, 4},
                        {3, 1},
                        {3, 2},
                        {5, 1},
                        {7, 1},
                        {13, 1}}) {
        Field f(p, k);
        const std::uint32_t q = f.q();
        // Fermat/Lagrange over the full carrier.
        for (std::uint32_t x = 1; x < q; ++x) CHECK(f.pow(x, q - 1) == 1);

        auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        };
        if (q <= 16) {
            for (std::uint32_t a = 0; a < q; ++a) {
                for (std::uint32_t b = 0; b < q; ++b) {
                    for (std::uint32_t c = 0; c < q; ++c) check_triple(a, b, c);
                }
            }
        } else {
            std::mt19937 rng(12345);
            std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
            for (int i = 0; i < 10000; ++i) check_triple(dist(rng), dist(rng), dist(rng));
        }
        // Unit laws and inverses.
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK((q - 1) % f.order(a) == 0);
            }
        }
    }
}

TEST_CASE("coefficient encoding is a bijection") {
    Field f9(3, 2);
    for (std::uint32_t code = 0; code < 9; ++code) {
        const auto coeffs = f9.coeffs(code);
        REQUIRE(coeffs.size() == 2);
        CHECK(f9.code(coeffs) == code);
    }
    CHECK_THROWS_AS(f9.code({1}), Error);
    CHECK_THROWS_AS(f9.code({3, 0}), Error);
}

TEST_CASE("field element operations and mismatch detection") {
    Field f4(2, 2);
    Field f8(2, 3);
    FieldElem x(f4, 2), y(f4, 3);
    CHECK((x * y).code() == 1);
    CHECK((x + y).code() == 1);
    CHECK((-x).code() == 2);
    CHECK(x.inverse() == y);
    CHECK(x.pow(3).code() == 1);
    CHECK(x.order() == 3);
    FieldElem z(f8, 2);
    CHECK_THROWS_AS(x + z, Error);
    CHECK_THROWS_AS(x * z, Error);
    CHECK_THROWS_AS(FieldElem(f4, 0).order(), Error);
    CHECK_THROWS_AS(FieldElem(f4, 0).inverse(), Error);
    CHECK_THROWS_AS(FieldElem(f4, 7), Error);
}

TEST_CASE("a larger field still behaves") {
    Field f(2, 10);  // GF(1024) exercises the log-table path
    CHECK(f.q() == 1024);
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::uint32_t> dist(1, 1023);
    for (int i = 0; i < 200; ++i) {
        const std::uint32_t a = dist(rng);
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, 1023) == 1);
        CHECK(1023 % f.order(a) == 0);
    }
}
