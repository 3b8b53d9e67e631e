#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "grada/finexseq.hpp"

using namespace grada;

namespace {

FinExSeq random_seq(std::mt19937_64& rng, bool zero_one = false)
{
    std::uniform_int_distribution<int> nexc(0, 4), pos(-6, 6), num(-3, 3), den(1, 3);
    Rational def = zero_one ? Rational(rng() & 1) : Rational(num(rng), den(rng));
    std::map<std::int64_t, Rational> ex;
    int n = nexc(rng);
    for (int i = 0; i < n; ++i)
        ex[pos(rng)] = zero_one ? Rational(rng() & 1) : Rational(num(rng), den(rng));
    return seq_make(def, std::move(ex));
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    REQUIRE(parse_rational("3/6") == Rational(1, 2));
    REQUIRE(parse_rational("-2/4") == Rational(-1, 2));
    REQUIRE(parse_rational("7") == Rational(7));
    REQUIRE(to_string(Rational(-1, 2)) == "-1/2");
    REQUIRE(to_string(Rational(4)) == "4");
    REQUIRE_THROWS_AS(parse_rational("1/0"), Error);
    REQUIRE_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("sequence construction is canonical")
{
    auto e1 = FinExSeq::kronecker(1);
    REQUIRE(e1 == seq_make(0, {{1, 1}}));
    REQUIRE(e1.at(1) == 1);
    REQUIRE(e1.at(2) == 0);

    auto unit3 = seq_make(1, {{0, 0}, {3, 0}});
    REQUIRE(unit3.at(0) == 0);
    REQUIRE(unit3.at(3) == 0);
    REQUIRE(unit3.at(-5) == 1);

    // An exception equal to the default is dropped.
    REQUIRE(seq_make(0, {{5, 0}}) == FinExSeq::zero());
    REQUIRE(seq_make(0, {{5, 0}}).exceptions().empty());
}

TEST_CASE("componentwise arithmetic")
{
    auto e1 = FinExSeq::kronecker(1);
    auto e2 = FinExSeq::kronecker(2);
    REQUIRE((e1 * e2).is_zero());
    REQUIRE(e1 + e1 == seq_make(0, {{1, 2}}));

    auto um1 = seq_make(1, {{0, 0}, {-1, 0}});
    auto u1 = seq_make(1, {{0, 0}, {1, 0}});
    REQUIRE(um1 * u1 == seq_make(1, {{-1, 0}, {0, 0}, {1, 0}}));
}

TEST_CASE("bilateral shift")
{
    REQUIRE(seq_shift(FinExSeq::kronecker(0), 3) == FinExSeq::kronecker(3));
    auto a = seq_make(Rational(1, 2), {{2, 5}});
    REQUIRE(seq_shift(a, 0) == a);
    REQUIRE(seq_shift(seq_shift(FinExSeq::kronecker(1), 2), -2) == FinExSeq::kronecker(1));
    // Shifts compose additively.
    REQUIRE(seq_shift(seq_shift(a, 3), 4) == seq_shift(a, 7));
}

TEST_CASE("idempotent detection")
{
    REQUIRE(FinExSeq::kronecker(1).is_idempotent());
    REQUIRE(seq_make(1, {{0, 0}}).is_idempotent());
    REQUIRE_FALSE(seq_make(0, {{1, Rational(1, 2)}}).is_idempotent());
    REQUIRE(FinExSeq::constant(1).is_idempotent());
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        auto a = random_seq(rng), b = random_seq(rng), c = random_seq(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("shift is a ring automorphism")
{
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<std::int64_t> shift(-5, 5);
    for (int i = 0; i < 200; ++i) {
        auto a = random_seq(rng), b = random_seq(rng);
        auto n = shift(rng);
        REQUIRE(seq_shift(a * b, n) == seq_shift(a, n) * seq_shift(b, n));
        REQUIRE(seq_shift(a + b, n) == seq_shift(a, n) + seq_shift(b, n));
    }
}

TEST_CASE("canonical form is unique")
{
    std::mt19937_64 rng(44);
    for (int i = 0; i < 200; ++i) {
        auto a = random_seq(rng);
        // Rebuild from an expansion that also samples non-exception slots.
        std::map<std::int64_t, Rational> expansion;
        for (const auto& [pos, v] : a.exceptions())
            expansion[pos] = v;
        for (std::int64_t p = -8; p <= 8; p += 3)
            expansion[p] = a.at(p);
        REQUIRE(seq_make(a.default_value(), std::move(expansion)) == a);
    }
}
