#include <doctest.h>

#include "ilab/gate.hpp"
#include "ilab/preset.hpp"

using namespace ilab;

namespace {

BiPoly s3_poly() {
    return BiPoly({IntPoly{-1, 1}, IntPoly{0, 1}, IntPoly{}, IntPoly{1}});
}

BiPoly a5_poly() {
    return BiPoly({IntPoly{-24, 9}, IntPoly{25, -3}, IntPoly{0, 1}, IntPoly{-10},
                   IntPoly{}, IntPoly{1}});
}

}  // namespace

TEST_CASE("compute_N on the S3 family") {
    auto base = compute_N(s3_poly());
    CHECK(base.n == 3);
    CHECK(base.F1 == IntPoly{-27, 54, -27, -4});
    CHECK(base.F2 == IntPoly{0, -72});
    CHECK(base.N == 1);
    CHECK(base.N_support.empty());
    CHECK(base.G1 == base.F1);
    CHECK(base.G2 == base.F2);
}

TEST_CASE("compute_N on the A5 family") {
    auto base = compute_N(a5_poly());
    CHECK(base.N == 1);
    // F2 = 20 * disc(fbar'); content check from the recomputed value
    CHECK(base.F2 == Int(20) * discriminant_x(normalized_derivative(a5_poly())));
}

TEST_CASE("compute_N rejects non-separable and non-monic input") {
    // (x - t)^2 (x + 1): repeated factor, disc 0
    BiPoly sq = BiPoly({IntPoly{0, 0, 1}, IntPoly{0, -2}, IntPoly{1}});  // (x-t)^2
    BiPoly lin = BiPoly({IntPoly{1}, IntPoly{1}});
    CHECK_THROWS_AS(compute_N(sq * lin), NotSeparable);
    BiPoly notmonic({IntPoly{1}, IntPoly{}, IntPoly{}, IntPoly{2}});
    CHECK_THROWS_AS(compute_N(notmonic), NotMonic);
}

TEST_CASE("witness search on S3: c=2 is the first acceptable") {
    auto base = compute_N(s3_poly());
    CHECK_FALSE(witness_accepted(base.F1, base.F2, base.N_support, 0));
    CHECK_FALSE(witness_accepted(base.F1, base.F2, base.N_support, 1));
    CHECK_FALSE(witness_accepted(base.F1, base.F2, base.N_support, -1));
    CHECK(witness_accepted(base.F1, base.F2, base.N_support, 2));
    CHECK(find_witness(base, -10000, 10000) == 2);
    CHECK_THROWS_AS(find_witness(base, 0, 1), NoWitnessInRange);
}

TEST_CASE("witness acceptance on A5: paper's -3 and the smallest 1") {
    auto base = compute_N(a5_poly());
    CHECK(witness_accepted(base.F1, base.F2, base.N_support, -3));
    CHECK_FALSE(witness_accepted(base.F1, base.F2, base.N_support, 0));
    CHECK(find_witness(base, -10000, 10000) == 1);
}

TEST_CASE("bad primes: toy pair G1=t^2+1, G2=t+3") {
    IntPoly G1{1, 0, 1};
    IntPoly G2{3, 1};
    // Res = 10; candidates {2,5}; brute-force oracle for bad residues.
    auto scan = bad_primes(G1, G2, {}, 0);
    REQUIRE(scan.bad.size() == 2);
    CHECK(scan.bad[0].p == 2);
    CHECK(scan.bad[0].bad_residues == std::vector<Int>{1});
    CHECK(scan.bad[1].p == 5);
    CHECK(scan.bad[1].bad_residues == std::vector<Int>{2});
    for (const auto& bp : scan.bad) {
        long p = bp.p.get_si();
        std::vector<Int> brute;
        for (long r = 0; r < p; ++r) {
            Int g1 = G1.eval(r) % p, g2 = G2.eval(r) % p;
            if (g1 == 0 && g2 == 0) brute.push_back(r);
        }
        CHECK(bp.bad_residues == brute);
    }
}

TEST_CASE("bad primes on the S3 preset with witness 2") {
    auto base = compute_N(s3_poly());
    auto scan = bad_primes(base.G1, base.G2, base.N_support, 2);
    REQUIRE(scan.bad.size() == 2);
    CHECK(scan.bad[0].p == 2);
    CHECK(scan.bad[0].bad_residues == std::vector<Int>{1});
    CHECK(scan.bad[0].chosen_residue == 0);
    CHECK(scan.bad[1].p == 3);
    CHECK(scan.bad[1].bad_residues == std::vector<Int>{0});
    CHECK(scan.bad[1].chosen_residue == 2);
    CHECK(scan.skipped.empty());
}

TEST_CASE("trivial candidates: G1 = 1") {
    auto scan = bad_primes(IntPoly{1}, IntPoly{0, 1}, {}, 0);
    CHECK(scan.bad.empty());
    CHECK(scan.skipped.empty());
}

TEST_CASE("candidates beyond the enumeration bound are skipped, not pinned") {
    // Res(t^2 - P, t + 1) = 1 - P = -2 * 10000019 with 10000019 prime.
    Int P = Int(2) * 10000019 + 1;
    IntPoly G1(std::vector<Int>{-P, Int(0), Int(1)});
    IntPoly G2{1, 1};
    GateOptions opts;
    opts.residue_enum_bound = 10000000;
    auto scan = bad_primes(G1, G2, {}, 0, opts);
    bool saw_big = false;
    for (const auto& s : scan.skipped) {
        if (s.value == 10000019) {
            saw_big = true;
            CHECK(s.is_prime);
            CHECK(s.witness_clear);  // G1(0) = -P, G2(0) = 1: not both divisible
        }
    }
    CHECK(saw_big);
    for (const auto& bp : scan.bad) CHECK(bp.p <= 10000000);
}

TEST_CASE("progression construction and soundness") {
    auto cert = run_gate(s3_poly());
    CHECK(cert.witness_c == 2);
    CHECK(cert.progression.a == 2);
    CHECK(cert.progression.b == 6);
    // Brute-force soundness on c in {2, 8, ..., 302}.
    for (long k = 0; k <= 50; ++k) {
        Int c = cert.progression.member(k);
        CHECK(cert.member_supported(c));
        Int g = gcd(cert.F1.eval(c), cert.F2.eval(c));
        CHECK(prime_support_within(g, cert.N_support));
        for (const auto& bp : cert.bad_primes) {
            Int r = c % bp.p;
            if (r < 0) r += bp.p;
            for (const Int& badr : bp.bad_residues) CHECK(r != badr);
        }
    }
    // N divides F1(c), F2(c) everywhere (trivially for N=1, but check shape)
    for (long c = -50; c <= 50; ++c) {
        CHECK(cert.F1.eval(c) % cert.N == 0);
        CHECK(cert.F2.eval(c) % cert.N == 0);
    }
}

TEST_CASE("toy progression (t^2+1, t+3) pinned at 0 mod 2, 0 mod 5") {
    std::vector<BadPrime> bad;
    bad.push_back({Int(2), {Int(1)}, Int(0), true});
    bad.push_back({Int(5), {Int(2)}, Int(0), true});
    auto prog = build_progression(bad);
    CHECK(prog.a == 0);
    CHECK(prog.b == 10);
    IntPoly G1{1, 0, 1};
    IntPoly G2{3, 1};
    for (long c = 0; c <= 100; c += 10) {
        Int g = gcd(G1.eval(c), G2.eval(c));
        CHECK(prime_support_within(g, {}));
    }
}

TEST_CASE("empty bad prime set yields the trivial progression") {
    CHECK(build_progression({}).a == 0);
    CHECK(build_progression({}).b == 1);
}

TEST_CASE("refinement with empty S leaves the progression alone") {
    auto cert = run_gate(s3_poly());
    auto [prog, ref] = refine_for_exceptional_primes(cert.f, cert.progression, 1, {});
    CHECK(prog.a == cert.progression.a);
    CHECK(prog.b == cert.progression.b);
    CHECK(ref.modulus == 1);
}

TEST_CASE("refinement exponents follow the disc valuations") {
    // Toy: f = x^3 + t x + t - 1 with t_ref = 2, S = {59}.
    // disc(f(2,x)) = -59, so k = 2*1+1 = 3 and M = 59^3.
    auto cert = run_gate(s3_poly());
    auto [prog, ref] = refine_for_exceptional_primes(cert.f, cert.progression, 2, {Int(59)});
    REQUIRE(ref.exponents.size() == 1);
    CHECK(ref.exponents[0].first == 59);
    CHECK(ref.exponents[0].second == 3);
    CHECK(ref.modulus == Int(59) * 59 * 59);
    CHECK(prog.b == Int(6) * ref.modulus);
    CHECK((prog.a - 2) % ref.modulus == 0);
    CHECK((prog.a - cert.progression.a) % 6 == 0);
    // Non-coprime S is rejected.
    CHECK_THROWS_AS(refine_for_exceptional_primes(cert.f, cert.progression, 2, {Int(2)}),
                    NonCoprimeModuli);

    // Sampled members carry the same disc valuation at the refined primes as
    // the reference point (they agree mod 59^3, and v_59(disc) = 1 < 3).
    for (long k = -2; k <= 2; ++k) {
        Int c = prog.member(k);
        CHECK(valuation(cert.F1.eval(c), 59) == valuation(cert.F1.eval(2), 59));
        CHECK(cert.member_supported(c) ==
              prime_support_within(gcd(cert.F1.eval(c), cert.F2.eval(c)), cert.N_support));
    }
}

TEST_CASE("N divides both discriminant values everywhere (psl33)") {
    const Preset* pre = find_preset("psl33");
    REQUIRE(pre);
    auto base = compute_N(pre->poly());
    CHECK(base.N_support == std::set<Int>{Int(2), Int(3), Int(12491)});
    for (long c = -50; c <= 50; ++c) {
        CHECK(base.F1.eval(c) % base.N == 0);
        CHECK(base.F2.eval(c) % base.N == 0);
    }
}
