#include <doctest.h>

#include <random>

#include "ilab/intarith.hpp"

using namespace ilab;

TEST_CASE("primality basics") {
    CHECK(is_prime(Int(12491)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(0)));
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(592191293)));
    CHECK_FALSE(is_prime(Int(611523441)));
}

TEST_CASE("8243 is prime by trial division oracle") {
    bool prime = true;
    for (long d = 2; d * d <= 8243; ++d)
        if (8243 % d == 0) prime = false;
    CHECK(prime);
    CHECK(is_prime(Int(8243)));
}

TEST_CASE("factor small and signed") {
    auto f = factor(Int(59));
    REQUIRE(f.complete);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::pair<Int, unsigned>(Int(59), 1u));

    auto g = factor(Int(-144));
    REQUIRE(g.complete);
    CHECK(g.sign == -1);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0] == std::pair<Int, unsigned>(Int(2), 4u));
    CHECK(g.factors[1] == std::pair<Int, unsigned>(Int(3), 2u));
    CHECK(g.recompose() == -144);

    // 3^2 * 8243^2 expanded and re-factored.
    Int n = Int(3) * 3 * 8243 * 8243;
    CHECK(n == 611523441);
    auto h = factor(n);
    REQUIRE(h.complete);
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0] == std::pair<Int, unsigned>(Int(3), 2u));
    CHECK(h.factors[1] == std::pair<Int, unsigned>(Int(8243), 2u));

    CHECK_THROWS_AS(factor(Int(0)), ZeroInput);
}

TEST_CASE("factor recomposes on random 64-bit inputs") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 2000; ++i) {
        Int n = Int((unsigned long)(rng() % (1ULL << 62))) + 2;
        auto f = factor(n, {.trial_bound = 20000, .rho_budget = 1u << 22});
        CHECK(f.recompose() == n);
        for (auto& [p, e] : f.factors) CHECK(is_prime(p));
        for (size_t j = 1; j < f.factors.size(); ++j)
            CHECK(f.factors[j - 1].first < f.factors[j].first);
        CHECK(f.complete == (abs(f.cofactor) == 1));
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(Int(24), Int(2)) == 3);
    CHECK(valuation(Int(7), Int(11)) == 0);
    CHECK_THROWS_AS(valuation(Int(0), Int(3)), ZeroInput);
    // 24000 @ 5 by repeated division oracle.
    Int n = 24000;
    unsigned e = 0;
    while (n % 5 == 0) { n /= 5; ++e; }
    CHECK(e == 3);
    CHECK(valuation(Int(24000), Int(5)) == 3);
}

TEST_CASE("prime_support_within agrees with full factorization") {
    CHECK(prime_support_within(Int(-144), {Int(2), Int(3)}));
    CHECK_FALSE(prime_support_within(Int(59), {Int(2), Int(3)}));
    CHECK(prime_support_within(Int(1), {}));
    CHECK_THROWS_AS(prime_support_within(Int(0), {}), ZeroInput);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        Int n = Int(rng() % 999983) + 2;
        std::set<Int> S = {Int(2), Int(3), Int(5), Int(7)};
        auto f = factor(n);
        bool expect = true;
        for (auto& [p, e] : f.factors)
            if (!S.count(p)) expect = false;
        CHECK(prime_support_within(n, S) == expect);
    }
}

TEST_CASE("crt") {
    auto [a, m] = crt({{Int(0), Int(2)}, {Int(2), Int(3)}});
    CHECK(a == 2);
    CHECK(m == 6);
    // exhaustive oracle over 0..5
    bool found = false;
    for (int c = 0; c < 6; ++c)
        if (c % 2 == 0 && c % 3 == 2) {
            CHECK(c == a);
            found = true;
        }
    CHECK(found);

    auto [a2, m2] = crt({{Int(1), Int(1)}});
    CHECK(a2 == 0);
    CHECK(m2 == 1);

    auto [a3, m3] = crt({{Int(3), Int(5)}, {Int(4), Int(7)}});
    CHECK(a3 == 18);
    CHECK(m3 == 35);

    CHECK_THROWS_AS(crt({{Int(1), Int(4)}, {Int(1), Int(6)}}), NonCoprimeModuli);

    // direct modular reduction on random coprime triples
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Int m1 = Int(rng() % 1000) + 2;
        Int m2_ = Int(rng() % 1000) + 2;
        Int m3_ = Int(rng() % 1000) + 2;
        if (gcd(m1, m2_) != 1 || gcd(m1, m3_) != 1 || gcd(m2_, m3_) != 1) continue;
        Int r1 = Int(rng()) % m1, r2 = Int(rng()) % m2_, r3 = Int(rng()) % m3_;
        auto [x, M] = crt({{r1, m1}, {r2, m2_}, {r3, m3_}});
        CHECK(x % m1 == r1);
        CHECK(x % m2_ == r2);
        CHECK(x % m3_ == r3);
        CHECK(M == m1 * m2_ * m3_);
        CHECK(x >= 0);
        CHECK(x < M);
    }
}

TEST_CASE("perfect squares") {
    auto r = perfect_square_root(Int(611523441));
    REQUIRE(r.has_value());
    CHECK(*r == 24729);
    CHECK(*r == Int(3) * 8243);
    CHECK_FALSE(is_perfect_square(Int(59)));
    CHECK(is_perfect_square(Int(0)));
    CHECK_FALSE(is_perfect_square(Int(-4)));
}

TEST_CASE("factor handles partial factorization honestly") {
    // Product of two primes just above the rho budget's practical reach
    // would be slow; instead verify flags with a tiny budget.
    Int p("1000000000000000003");  // prime
    Int q("1000000000000000009");  // prime
    auto f = factor(p * q, {.trial_bound = 100, .rho_budget = 10});
    CHECK_FALSE(f.complete);
    CHECK(f.cofactor == p * q);
    CHECK(f.recompose() == p * q);
}
