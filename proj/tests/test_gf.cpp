#include <random>

#include "blowup/gf.hpp"
#include "doctest.h"

using namespace blowup;

TEST_CASE("field construction") {
    auto f2 = FieldSpec::make(2);
    CHECK(f2->q() == 2);
    CHECK(f2->modulus().empty());

    auto f4 = FieldSpec::make(2, 2, std::vector<std::uint32_t>{1, 1, 1});
    CHECK(f4->q() == 4);

    // x^2 + 1 = (x + 1)^2 over GF(2).
    CHECK_THROWS_AS(FieldSpec::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), FieldError);
    CHECK_THROWS_AS(FieldSpec::make(4), FieldError);
    CHECK_THROWS_AS(FieldSpec::make(2, 0), FieldError);
    CHECK_THROWS_AS(FieldSpec::make(2, 17), FieldError);
    CHECK_THROWS_AS(FieldSpec::make(2, 2, std::vector<std::uint32_t>{1, 1}), FieldError);
    CHECK_THROWS_AS(FieldSpec::make(2, 2, std::vector<std::uint32_t>{1, 1, 0}), FieldError);
    CHECK_THROWS_AS(FieldSpec::make(3, 2, std::vector<std::uint32_t>{1, 0, 3}), FieldError);
    CHECK_NOTHROW(FieldSpec::make(2, 16));
    CHECK_THROWS_AS(FieldSpec::make(257, 2), FieldError);  // 66049 > 2^16
}

TEST_CASE("default modulus is the smallest irreducible") {
    CHECK(default_modulus(2, 2) == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(default_modulus(2, 3) == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3 + x + 1
    CHECK(default_modulus(3, 2) == std::vector<std::uint32_t>{1, 0, 1});     // x^2 + 1
    CHECK(is_irreducible(2, {1, 1, 0, 0, 1}));                               // x^4 + x + 1
    CHECK_FALSE(is_irreducible(2, {1, 0, 0, 0, 1}));                         // (x+1)^4
}

TEST_CASE("basic arithmetic") {
    auto f2 = FieldSpec::make(2);
    CHECK(f2->add(FieldElement{1}, FieldElement{1}) == FieldElement{0});

    auto f4 = FieldSpec::make(2, 2);
    // x * x = x^2 = x + 1 mod x^2 + x + 1; x is rep 2, x + 1 is rep 3.
    CHECK(f4->mul(FieldElement{2}, FieldElement{2}) == FieldElement{3});

    auto f3 = FieldSpec::make(3);
    CHECK(f3->inv(FieldElement{2}) == FieldElement{2});
    CHECK_THROWS_AS(f3->inv(FieldElement{0}), FieldError);
    CHECK(f3->from_int(-1) == FieldElement{2});
    CHECK(f3->from_int(7) == FieldElement{1});
}

TEST_CASE("element enumeration") {
    auto order = [](const Field& f) {
        std::vector<std::uint32_t> v;
        for (auto e : f->elements()) v.push_back(e.rep);
        return v;
    };
    CHECK(order(FieldSpec::make(2)) == std::vector<std::uint32_t>{0, 1});
    CHECK(order(FieldSpec::make(3)) == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(order(FieldSpec::make(2, 2)) == std::vector<std::uint32_t>{0, 1, 2, 3});
}

namespace {

void check_axioms(const FieldSpec& f, const std::vector<FieldElement>& xs) {
    for (auto a : xs) {
        CHECK(f.add(a, f.zero()) == a);
        CHECK(f.mul(a, f.one()) == a);
        CHECK(f.add(a, f.neg(a)) == f.zero());
        if (!a.is_zero()) {
            CHECK(f.mul(a, f.inv(a)) == f.one());
            CHECK(f.inv(f.inv(a)) == a);
        }
        for (auto b : xs) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (auto c : xs) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

}  // namespace

TEST_CASE("field axioms, exhaustive for q <= 16") {
    for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u}, {2u, 3u},
                        {3u, 2u}, {11u, 1u}, {13u, 1u}, {2u, 4u}}) {
        CAPTURE(p);
        CAPTURE(k);
        auto f = FieldSpec::make(p, k);
        check_axioms(*f, f->elements());
    }
}

TEST_CASE("field axioms, sampled for larger q") {
    std::mt19937_64 rng(42);
    for (auto [p, k] : {std::pair{2u, 8u}, {3u, 5u}, {251u, 1u}, {2u, 16u}, {251u, 2u}}) {
        auto f = FieldSpec::make(p, k);
        std::uniform_int_distribution<std::uint32_t> dist(0, f->q() - 1);
        std::vector<FieldElement> xs;
        for (int i = 0; i < 12; ++i) xs.emplace_back(dist(rng));
        check_axioms(*f, xs);
    }
}

TEST_CASE("Frobenius: a^q = a, exhaustive for q <= 256") {
    for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u},
                        {2u, 8u}, {3u, 5u}, {251u, 1u}}) {
        auto f = FieldSpec::make(p, k);
        for (auto a : f->elements()) {
            // Repeated multiplication, independent of the log-table pow.
            FieldElement x = f->one();
            for (std::uint32_t i = 0; i < f->q(); ++i) x = f->mul(x, a);
            CHECK(x == a);
            CHECK(f->pow(a, f->q()) == a);
        }
    }
}
