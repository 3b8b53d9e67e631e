#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "grada/finexseq.hpp"
#include "grada/idempotents.hpp"
#include "grada/leavitt.hpp"

using namespace grada;

namespace {

FinExSeq random01(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> nexc(0, 4), pos(-5, 5);
    std::map<std::int64_t, Rational> ex;
    int n = nexc(rng);
    for (int i = 0; i < n; ++i)
        ex[pos(rng)] = Rational(rng() & 1);
    return seq_make(Rational(rng() % 4 == 0), std::move(ex));
}

FinExSeq random_rational_seq(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> nexc(0, 4), pos(-5, 5), num(-3, 3), den(1, 3);
    std::map<std::int64_t, Rational> ex;
    int n = nexc(rng);
    for (int i = 0; i < n; ++i)
        ex[pos(rng)] = Rational(num(rng), den(rng));
    return seq_make(Rational(num(rng), den(rng)), std::move(ex));
}

const FinExSeq e1 = FinExSeq::kronecker(1);
const FinExSeq e2 = FinExSeq::kronecker(2);
const FinExSeq um1 = seq_make(1, {{0, 0}, {-1, 0}});   // 1_{-1} of the shift example
const FinExSeq u1 = seq_make(1, {{0, 0}, {1, 0}});     // 1_1
const FinExSeq u3 = seq_make(1, {{0, 0}, {3, 0}});     // 1_3
const FinExSeq u0 = seq_make(1, {{0, 0}});             // 1_0

} // namespace

TEST_CASE("idempotent order")
{
    REQUIRE(idem_leq(e1, e1 + e2));
    REQUIRE(idem_leq(e1, e1));
    REQUIRE_FALSE(idem_leq(e1, e2));
    REQUIRE_THROWS_MATCHES(idem_leq(seq_make(0, {{0, Rational(1, 2)}}), e1), Error,
                           Catch::Matchers::Predicate<Error>(
                               [](const Error& e) { return e.code() == Errc::NotIdempotent; }));
}

TEST_CASE("join and meet")
{
    REQUIRE(idem_join(um1, u1) == u0);
    REQUIRE(idem_join(e1, e1) == e1);
    REQUIRE(idem_meet(e1, e2).is_zero());
    REQUIRE(idem_join(e1, e2) == e1 + e2);
}

TEST_CASE("join of noncommuting idempotents is rejected")
{
    // Two parallel edges give honest noncommuting idempotents: p = ff* + fg*
    // and q = ff* satisfy qp = p but pq = q.
    auto q = Quiver::finite({"v1", "v2"}, {{"f", "v1", "v2"}, {"g", "v1", "v2"}});
    auto f = *q->edge_index("f");
    auto g = *q->edge_index("g");
    auto ff = LpaElement::from_monomial(q, Monomial{make_path(*q, 0, {f}), make_path(*q, 0, {f})});
    auto fg = LpaElement::from_monomial(q, Monomial{make_path(*q, 0, {f}), make_path(*q, 0, {g})});
    auto p = ff + fg;
    REQUIRE(is_idempotent(p));
    REQUIRE(is_idempotent(ff));
    REQUIRE_FALSE(commute(p, ff));
    REQUIRE_THROWS_MATCHES(idem_join(p, ff), Error,
                           Catch::Matchers::Predicate<Error>(
                               [](const Error& e) { return e.code() == Errc::NonCommuting; }));
}

TEST_CASE("join closure")
{
    auto closure = join_closure<FinExSeq>({e1, e2});
    REQUIRE(closure.size() == 3);
    REQUIRE(std::find(closure.begin(), closure.end(), e1 + e2) != closure.end());

    REQUIRE(join_closure<FinExSeq>({e1}) == std::vector<FinExSeq>{e1});

    auto shift_family = join_closure<FinExSeq>({um1, u1, u3});
    REQUIRE(std::find(shift_family.begin(), shift_family.end(), u0) != shift_family.end());
    auto top = greatest_element(shift_family);
    REQUIRE(top.value);
    REQUIRE(*top.value == u0);
}

TEST_CASE("greatest element")
{
    auto g1 = greatest_element<FinExSeq>({e1, e2});
    REQUIRE(g1.value);
    REQUIRE(*g1.value == e1 + e2);
    REQUIRE(g1.dominates == std::vector<bool>{true, true});

    REQUIRE_FALSE(greatest_element<FinExSeq>({}).value);

    auto g2 = greatest_element<FinExSeq>({um1, u1});
    REQUIRE(g2.value);
    REQUIRE(*g2.value == u0);
}

TEST_CASE("orthogonality")
{
    REQUIRE(are_orthogonal(e1, e2));
    REQUIRE_FALSE(are_orthogonal(um1, u1));
    REQUIRE(are_orthogonal(e1, FinExSeq::zero()));
}

TEST_CASE("maximal elements")
{
    std::vector<FinExSeq> set = {e1, e2, e1 + e2};
    auto max1 = maximal_elements(set);
    REQUIRE(max1 == std::vector<FinExSeq>{e1 + e2});

    std::vector<FinExSeq> incomparable = {e1, e2};
    REQUIRE(maximal_elements(incomparable) == incomparable);

    std::vector<FinExSeq> single = {e1};
    REQUIRE(maximal_elements(single) == single);
}

TEST_CASE("common unit construction")
{
    REQUIRE(tominaga_left_unit<FinExSeq>({{u1, e2}}) == u1);   // base case: e2·1_1 = e2
    REQUIRE(tominaga_left_unit<FinExSeq>({{e1, e1}, {e2, e2}}) == e1 + e2);
    REQUIRE_THROWS_MATCHES(tominaga_left_unit<FinExSeq>({{e1, e2}}), Error,
                           Catch::Matchers::Predicate<Error>(
                               [](const Error& e) { return e.code() == Errc::BadWitness; }));
}

TEST_CASE("absorption transfers along the order")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto f = random01(rng);
        auto e = f * random01(rng);   // e ≤ f by construction
        REQUIRE(idem_leq(e, f));
        auto x = e * random_rational_seq(rng);
        REQUIRE(x == e * x);
        REQUIRE(x == f * x);
        REQUIRE(x == x * f);
    }
}

TEST_CASE("closure is a closure operator")
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 60; ++i) {
        std::vector<FinExSeq> gens;
        for (int k = 0; k < 3; ++k)
            gens.push_back(random01(rng));
        auto once = join_closure(gens);
        auto twice = join_closure(once);
        REQUIRE(once == twice);
    }
}

TEST_CASE("greatest element fixes whatever any member fixes")
{
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        std::vector<FinExSeq> gens;
        for (int k = 0; k < 3; ++k)
            gens.push_back(random01(rng));
        auto top = greatest_element(gens);
        REQUIRE(top.value);
        auto member = gens[rng() % gens.size()];
        auto x = member * random_rational_seq(rng);
        REQUIRE(*top.value * x == x);
        REQUIRE(x * *top.value == x);
    }
}

TEST_CASE("common unit fixes every witness in random commuting families")
{
    std::mt19937_64 rng(10);
    for (int i = 0; i < 200; ++i) {
        std::uniform_int_distribution<int> count(1, 6);
        int n = count(rng);
        std::vector<std::pair<FinExSeq, FinExSeq>> left_pairs, right_pairs;
        for (int k = 0; k < n; ++k) {
            auto unit = random01(rng);
            auto x = unit * random_rational_seq(rng);
            left_pairs.emplace_back(unit, x);
            right_pairs.emplace_back(unit, x);
        }
        auto e = tominaga_left_unit(left_pairs);
        for (const auto& [unit, x] : left_pairs)
            REQUIRE(e * x == x);
        auto e2r = tominaga_right_unit(right_pairs);
        for (const auto& [unit, x] : right_pairs)
            REQUIRE(x * e2r == x);
    }
}
