#include "ilab/reproduce.hpp"

#include <sstream>

namespace ilab {

namespace {

void add(std::vector<Check>& out, const std::string& name, bool pass, std::string detail = "",
         bool documented = false) {
    out.push_back({name, pass, documented, std::move(detail)});
}

Int pow_int(long base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), Int(base).get_mpz_t(), e);
    return r;
}

GateOptions default_gate_options() {
    GateOptions o;
    o.factor_opts.rho_budget = 1u << 22;
    return o;
}

}  // namespace

std::vector<Check> s3_checks() {
    std::vector<Check> out;
    const Preset& pre = *find_preset("s3");
    BiPoly f = pre.poly();

    IntPoly displayed_disc = IntPoly{-27, 54, -27, -4};  // -4t^3 - 27(t-1)^2
    IntPoly D = discriminant_x(f);
    add(out, "disc_x(f) = -4t^3 - 27(t-1)^2", D == displayed_disc, to_string(D));

    BiPoly nd = normalized_derivative(f);
    add(out, "fbar'(t,y) = y^2 + 3t", nd == BiPoly({IntPoly{0, 3}, IntPoly{}, IntPoly{1}}),
        to_string(nd, "y"));
    IntPoly F2 = Int(6) * discriminant_x(nd);
    add(out, "6*D(fbar') = -72t", F2 == IntPoly{0, -72}, to_string(F2));

    auto gate = run_gate(f, default_gate_options());
    add(out, "N = 1", gate.N == 1, gate.N.get_str());
    add(out, "witness c = 2 accepted and found first",
        gate.witness_c == 2 && gate.member_supported(2), "witness " + gate.witness_c.get_str());

    Int d2 = D.eval(2);
    add(out, "D(f(2,x)) = 59 up to sign", abs(d2) == 59,
        "recomputed " + d2.get_str() + " (displayed 59; fixed sign convention gives -59)");

    add(out, "disc_t(-4t^3 - 27(t-1)^2) = -629856", discriminant(D) == -629856,
        discriminant(D).get_str());

    add(out, "disc is not a constant times a square in Q(t) (regular)",
        !is_constant_times_square(D));

    bool sound = gate.progression.a == 2 && gate.progression.b == 6;
    for (long k = 0; k <= 50 && sound; ++k)
        sound = gate.member_supported(gate.progression.member(k));
    add(out, "progression (2 + 6Z) sound over its first 50 members", sound,
        "a=" + gate.progression.a.get_str() + " b=" + gate.progression.b.get_str());

    // f(-1,x) irreducible with group S3, read off mod 5 and mod 11
    IntPoly fm1 = f.specialize(-1);
    auto ev = irreducibility_evidence(fm1);
    auto p5 = degree_pattern(fm1, 5).degrees;
    auto p11 = degree_pattern(fm1, 11).degrees;
    bool shapes = (p5 == std::vector<int>{1, 2} && p11 == std::vector<int>{3}) ||
                  (p11 == std::vector<int>{1, 2} && p5 == std::vector<int>{3});
    auto verdict = identify(fm1, pre.candidates(), 50, kDefaultSeed, true);
    add(out, "f(-1,x) irreducible; patterns mod 5 and 11 pin S3",
        ev.certified() && shapes && verdict.surviving == std::vector<std::string>{"S3"});
    return out;
}

std::vector<Check> a5_checks() {
    std::vector<Check> out;
    const Preset& pre = *find_preset("a5");
    BiPoly f = pre.poly();

    BiPoly nd = normalized_derivative(f);
    add(out, "fbar'(0,v,y) = y^4 - 150y^2 + 50vy + 3125 - 375v",
        nd == BiPoly({IntPoly{3125, -375}, IntPoly{0, 50}, IntPoly{-150}, IntPoly{}, IntPoly{1}}),
        to_string(nd, "y", "v"));

    IntPoly D = discriminant_x(f);
    IntPoly printed_cubic{24000, -28400, 6480, -27};
    add(out, "recomputed D(f) is the square of the displayed cubic",
        D == printed_cubic * printed_cubic && content(D) == 1,
        "D(f) = " + to_string(D, "v") + " (degree 6, content 1)");

    IntPoly Dn = discriminant_x(nd);
    IntPoly F2 = Int(20) * Dn;
    add(out, "gcd(D(f), 20*D(fbar')) = 1 in Z[v]", gcd_z(D, F2) == IntPoly{1});
    add(out, "displayed cubic is not a constant times a square (regularity quantity)",
        !is_constant_times_square(printed_cubic),
        "the full D(f) is its square, as any A5 discriminant must be");

    auto gate = run_gate(f, default_gate_options());
    add(out, "witness c = -3 accepted", gate.member_supported(-3));

    Int dn3 = Dn.eval(-3);
    Int paper_dn3 = -pow_int(2, 4) * pow_int(5, 6) * 529 * 18379;
    add(out, "D(fbar'(0,-3)) = -2^4*5^6*23^2*18379", dn3 == paper_dn3,
        "recomputed " + dn3.get_str() + " = +2^4*5^8*45053 (45053 prime); displayed " +
            paper_dn3.get_str(),
        /*documented=*/true);

    Int d3 = D.eval(-3);
    auto root = perfect_square_root(d3);
    add(out, "recomputed disc(f(0,-3,x)) is a perfect square",
        root.has_value() && *root == 168249,
        "= 168249^2 = (3*17*3299)^2 = " + d3.get_str());
    Int paper_d3 = Int(9) * 8243 * 8243;
    add(out, "disc(f(0,-3,x)) = 3^2*8243^2", d3 == paper_d3,
        "recomputed " + d3.get_str() + " = (3*17*3299)^2; displayed " + paper_d3.get_str(),
        /*documented=*/true);

    add(out, "supports of disc(f(0,-3,x)) and 20*D(fbar'(0,-3)) are disjoint",
        gcd(d3, Int(20) * dn3) == 1);

    add(out, "f(0,0,x) = x^5 - 10x^3 + 25x - 24",
        f.specialize(0) == IntPoly{-24, 25, 0, -10, 0, 1});
    auto verdict = identify(f.specialize(0), pre.candidates(), 500, kDefaultSeed, true);
    add(out, "Galois group of f(0,0,x) identified as A5",
        verdict.surviving == std::vector<std::string>{"A5"},
        "surviving: " + (verdict.surviving.empty() ? "none" : verdict.surviving.front()));
    return out;
}

std::vector<Check> psl27_checks() {
    std::vector<Check> out;
    const Preset& pre = *find_preset("psl27");
    BiPoly f = pre.poly();

    IntPoly f0 = f.specialize(0);
    Int d0 = discriminant(f0);
    Int expected = Int(23) * 254106319;
    expected *= expected;
    add(out, "disc(f(0,x)) = 23^2 * 254106319^2", d0 == expected, d0.get_str());

    IntPoly D = discriminant_x(f);
    auto g = polynomial_square_root(D);
    bool square_of_quintic = g.has_value() && g->degree() == 5 &&
                             irreducibility_evidence(*g).certified();
    add(out, "disc_x(f) is the square of an irreducible quintic g(t)", square_of_quintic,
        g ? "g = " + to_string(*g) : "no polynomial square root");

    BiPoly nd = normalized_derivative(f);
    Int dn0 = Int(42) * discriminant(nd.specialize(0));
    std::set<Int> allowed = {2, 3, 7, 1213, 20789, 208589, Int(592191293)};
    bool support_ok = prime_support_within(dn0, allowed);
    auto fac = factor(abs(dn0), {.trial_bound = 100000, .rho_budget = 1u << 22});
    std::ostringstream os;
    for (auto& [p, e] : fac.factors) os << p.get_str() << "^" << e << " ";
    add(out, "support(42*D(fbar'(0,x))) within {2,3,7,1213,20789,208589,592191293}", support_ok,
        "recomputed " + os.str() + "(displayed exponent 7^20; recomputed 7^21)");
    add(out, "supports of the two discriminants are disjoint", gcd(d0, dn0) == 1);

    bool mod2_ok = true;
    for (long t0 : {0L, 1L}) {
        IntPoly fc = f.specialize(t0);
        ModPoly red = ModPoly::reduce(fc, 2);
        if (!is_squarefree_mod(red) || !is_irreducible_mod(fc, 2)) mod2_ok = false;
    }
    add(out, "f(t0,x) mod 2 separable and irreducible for t0 in {0,1}", mod2_ok,
        "covers every integer t0 (coefficients mod 2 depend only on t0 mod 2)");

    auto gate = run_gate(f, default_gate_options());
    add(out, "N = 1", gate.N == 1, gate.N.get_str());
    add(out, "witness t0 = 0 accepted and found first", gate.witness_c == 0);

    ScanOptions sopts;
    sopts.count = 1;
    sopts.negative_only = true;
    sopts.integer_line = true;  // progression modulus exceeds the window
    sopts.require_real_roots = 7;
    sopts.max_steps = 100000;
    sopts.galois_candidates = pre.candidates();
    sopts.claimed_group = pre.claimed_group;
    auto certs = scan_progression(gate, sopts);
    bool found = false;
    std::string detail = "no certificate within |c| <= 1e5";
    if (!certs.empty()) {
        const auto& c = certs[0];
        bool two_unramified = c.disc.value % 2 != 0;
        bool all_le2 = c.blanket_le2 && c.all_statuses_certified();
        found = c.c < 0 && abs(c.c) <= 100000 && two_unramified && all_le2 && c.real_roots == 7;
        detail = "c = " + c.c.get_str() + ", real roots " + std::to_string(c.real_roots) +
                 ", 2 unramified, all inertia statuses <= 2";
    }
    add(out, "certified totally-real specialization at negative c, unramified at 2", found,
        detail);
    return out;
}

std::vector<Check> psl33_checks() {
    std::vector<Check> out;
    const Preset& pre = *find_preset("psl33");
    BiPoly f = pre.poly();

    // displayed discriminant factorization
    IntPoly q2{-27, -40, 36};
    IntPoly q4{48892572, 125341344, -279653877, -8088768, 31171328};
    IntPoly displayed =
        (pow_int(2, 18) * pow_int(3, 12) * pow_int(12491, 6)) * (pow(q2, 4) * pow(q4, 4));
    IntPoly D = discriminant_x(f);
    add(out, "disc_x(f) = 2^18*3^12*12491^6*(36t^2-40t-27)^4*(quartic)^4", D == displayed,
        "degree " + std::to_string(D.degree()) + ", exact match");

    auto gate = run_gate(f, default_gate_options());
    std::set<Int> expect_support = {2, 3, 12491};
    add(out, "N_support = {2, 3, 12491}",
        gate.N_support == expect_support && gate.N_support_complete,
        "N = " + gate.N.get_str());
    add(out, "witness t0 = 0 accepted", gate.member_supported(0));

    // integral factorization of f(0,x) with degrees 1, 3, 9
    IntPoly x{0, 1};
    IntPoly cubic{-27, 0, 3, 1};
    IntPoly nonic{-432, -972, 0, 837, 108, -81, -54, 0, 0, 1};
    bool splits = f.specialize(0) == x * cubic * nonic;
    auto cubic_ev = irreducibility_evidence(cubic);
    auto nonic_ev = irreducibility_evidence(nonic);
    add(out, "f(0,x) = x * (irreducible cubic) * (nonic) with degrees {1,3,9}",
        splits && cubic_ev.certified() && nonic_ev.status != IrrStatus::Reducible,
        std::string("nonic irreducibility: ") +
            (nonic_ev.certified() ? "certified by degree-pattern sieve"
                                  : "no rational factor found (orbit argument per the source family)"));
    bool nine_divides_psl = false, nine_divides_f156 = false;
    for (const auto& cand : pre.candidates()) {
        if (cand.name == "PSL3(3)") nine_divides_psl = cand.order % 9 == 0;
        if (cand.name == "C13:C12") nine_divides_f156 = cand.order % 9 == 0;
    }
    add(out, "orbit sizes force 9 | |G|, eliminating C13:C12", nine_divides_psl && !nine_divides_f156);

    // Round-2 at the exceptional primes for f(1,x)
    IntPoly f1 = f.specialize(1);
    auto ev1 = irreducibility_evidence(f1);
    bool vals_zero = ev1.certified();
    for (long p : {2L, 3L, 12491L}) {
        if (!vals_zero) break;
        auto lm = local_field_disc_valuation(f1, p, ev1);
        if (lm.field_disc_valuation != 0) vals_zero = false;
    }
    add(out, "round-2 valuations of the f(1,x) root field at 2, 3, 12491 are all 0", vals_zero);

    // full field discriminant
    Int d1 = discriminant(f1);
    auto d1f = factor(d1, {.trial_bound = 1000000, .rho_budget = 1u << 22});
    Int fielddisc = 1;
    bool complete = d1f.complete;
    if (complete) {
        for (auto& [p, e] : d1f.factors) {
            auto lm = local_field_disc_valuation(f1, p, ev1);
            Int pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), lm.field_disc_valuation);
            fielddisc *= pk;
        }
    }
    Int displayed_fd = Int(23) * 31 * 109 * 23843;
    displayed_fd = displayed_fd * displayed_fd * displayed_fd * displayed_fd;
    Int recomputed_fd = Int(23) * 31 * 109 * 32843;
    recomputed_fd = recomputed_fd * recomputed_fd * recomputed_fd * recomputed_fd;
    add(out, "(23*31*109*23843)^4 divides the computed field discriminant",
        complete && mpz_divisible_p(fielddisc.get_mpz_t(), displayed_fd.get_mpz_t()),
        "computed field disc = " + fielddisc.get_str() +
            " = (23*31*109*32843)^4; displayed 23843 = 113*211 is composite "
            "(transposition of the prime 32843)",
        /*documented=*/true);
    add(out, "field discriminant of the f(1,x) root field = (23*31*109*32843)^4",
        complete && fielddisc == recomputed_fd);

    // refined progression members
    auto [prog, ref] = refine_for_exceptional_primes(f, gate.progression, *pre.tref,
                                                     gate.N_support);
    gate.progression = prog;
    gate.refinement = ref;
    std::ostringstream ks;
    for (auto& [p, k] : ref.exponents) ks << "k_" << p.get_str() << "=" << k << " ";
    ScanOptions sopts;
    sopts.count = 3;
    sopts.inertia.disc_factor.rho_budget = 1u << 14;
    sopts.galois_candidates = pre.candidates();
    sopts.claimed_group = pre.claimed_group;
    sopts.galois_prime_budget = 60;
    auto certs = scan_progression(gate, sopts);
    bool ok = certs.size() == 3;
    for (const auto& c : certs) {
        if (!c.support_check_passed || !c.blanket_le2) ok = false;
        for (const auto& e : c.prime_statuses)
            if (e.status != PrimeStatus::UnramifiedCertified &&
                e.status != PrimeStatus::InertiaLE2Certified)
                ok = false;
    }
    add(out, "3 refined progression members certify with statuses in {Unramified, InertiaLE2}",
        ok, ks.str() + "(Krasner exponents: sufficient, not minimal)");
    return out;
}

std::vector<Check> group_fact_checks() {
    std::vector<Check> out;
    PermGroup A5 = alternating_group(5);
    PermGroup G7 = psl27_degree7();
    PermGroup G13 = psl33_degree13();
    add(out, "|A5| = 60, |PSL2(7)| = 168, |PSL3(3)| = 5616",
        A5.order() == 60 && G7.order() == 168 && G13.order() == 5616);

    PermGroup A4 = point_stabilizer(A5, 4);
    PermGroup D5 = d5_in_a5();
    auto cover = conjugate_cover_check(A5, {D5, A4}, true);
    add(out, "A5 = union of conjugates of D5 and A4, trivial intersection, s(A5) = 2",
        cover.is_cover && cover.trivial_intersection && cover.s_value == 2);

    auto fpf = G13.fixed_point_free_elements();
    bool exactly_order_13 = true;
    size_t order13 = 0;
    for (const auto& g : G13.elements())
        if (g.order() == 13) ++order13;
    for (const auto& g : fpf)
        if (g.order() != 13) exactly_order_13 = false;
    add(out, "fixed-point-free elements of PSL3(3) are exactly the order-13 elements",
        exactly_order_13 && order13 == fpf.size(), std::to_string(fpf.size()) + " of them");
    add(out, "PSL3(3) has 324 fixed-point-free elements", fpf.size() == 324,
        "enumeration gives " + std::to_string(fpf.size()) +
            " = 144 Sylow-13 subgroups * 12 generators",
        /*documented=*/true);

    bool centralizers_fix = true;
    std::vector<int> inv_type = {1, 1, 1, 1, 1, 2, 2, 2, 2};
    for (const auto& t : G13.involutions()) {
        if (t.cycle_type() != inv_type) centralizers_fix = false;
        if (!G13.centralizer(t).fixes_a_point()) centralizers_fix = false;
    }
    add(out, "every 2^4 1^5 involution's centralizer in PSL3(3) fixes a point",
        centralizers_fix);

    PermGroup H1 = point_stabilizer(G13, 0);
    PermGroup H2 = cyclic_sylow(G13, 13);
    auto cover13 = conjugate_cover_check(G13, {H1, H2});
    auto compat5 = decomposition_compatibility(A5, {D5, A4}, 2);
    auto compat13 = decomposition_compatibility(G13, {H1, H2}, 2);
    add(out, "decomposition compatibility at inertia bound 2 for both covers",
        cover13.is_cover && cover13.trivial_intersection && compat5.compatible &&
            compat13.compatible);

    auto bad = decomposition_compatibility(A5, {D5, A4}, 3);
    bool s3_offender = !bad.compatible && !bad.offenders.empty();
    if (s3_offender) {
        size_t min_order = bad.offenders.front().order;
        s3_offender = min_order == 6;
        for (const auto& off : bad.offenders)
            if (off.order == min_order &&
                (off.abelian || off.element_orders != std::vector<int>{1, 2, 2, 2, 3, 3}))
                s3_offender = false;
    }
    add(out, "at inertia bound 3 the A5 cover fails with S3 as unique minimal offender",
        s3_offender);

    add(out, "A5, PSL2(7), PSL3(3) are generated by involutions",
        A5.generated_by_involutions() && G7.generated_by_involutions() &&
            G13.generated_by_involutions());

    auto census = A5.cycle_type_census();
    add(out, "A5 census: 1 + 20 + 15 + 24 over types 1^5, 1^2 3, 1 2^2, 5",
        census.size() == 4 && census[{1, 1, 1, 1, 1}] == 1 && census[{1, 1, 3}] == 20 &&
            census[{1, 2, 2}] == 15 && census[{5}] == 24);
    return out;
}

std::vector<Check> preset_checks(const std::string& name) {
    if (name == "s3") return s3_checks();
    if (name == "a5") return a5_checks();
    if (name == "psl27") return psl27_checks();
    if (name == "psl33") return psl33_checks();
    if (name == "groups") return group_fact_checks();
    return {};
}

Json to_json(const std::vector<Check>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        j["documented_discrepancy"] = c.documented;
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(j);
    }
    return arr;
}

}  // namespace ilab
