#include "ilab/preset.hpp"

#include "ilab/parse.hpp"

namespace ilab {

BiPoly Preset::poly() const { return parse_poly(source); }

const std::vector<GroupProfile>& Preset::candidates() const {
    return transitive_profiles(degree);
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = [] {
        std::vector<Preset> v;

        Preset s3;
        s3.name = "s3";
        s3.source = "x^3 + t*x + t - 1";
        s3.param = "t";
        s3.claimed_group = "S3";
        s3.degree = 3;
        s3.notes = "illustrative cubic family; every check is exact";
        v.push_back(std::move(s3));

        Preset a5;
        a5.name = "a5";
        a5.source = "x^5 - 10*x^3 + v*x^2 + (25 - 3*v)*x + 9*v - 24";
        a5.param = "v";
        a5.claimed_group = "A5";
        a5.degree = 5;
        a5.notes = "quintic family (quartic term dropped); feeds the intersective pipeline";
        v.push_back(std::move(a5));

        Preset psl27;
        psl27.name = "psl27";
        psl27.source =
            "x^7 - 10*x^6 + 163*x^4 - 333*x^3 + 191*x^2 - 12*x - 1 "
            "+ x^2*(x - 1)*(x^2 - 5*x + 5)*t";
        psl27.param = "t";
        psl27.claimed_group = "PSL2(7)";
        psl27.degree = 7;
        psl27.scan_negative = true;
        psl27.required_real_roots = 7;
        psl27.notes = "septic family, separable and irreducible mod 2 for every integer "
                      "specialization; totally-real specializations at negative t";
        v.push_back(std::move(psl27));

        Preset psl33;
        psl33.name = "psl33";
        psl33.source =
            "x*(x^3 + 3*x^2 - 27)"
            "*(x^9 - 54*x^6 - 81*x^5 + 108*x^4 + 837*x^3 - 972*x - 432) "
            "- t*(4*x^12 + 8*x^11 - 101*x^10 - 222*x^9 + 428*x^8 + 1970*x^7 "
            "- 1020*x^6 - 3240*x^5 - 1088*x^4 - 672*x^3 + 7776*x + 5184)";
        psl33.param = "t";
        psl33.claimed_group = "PSL3(3)";
        psl33.degree = 13;
        psl33.exceptional_primes = {Int(2), Int(3), Int(12491)};
        psl33.tref = 1;
        psl33.notes = "degree-13 family with exceptional primes 2, 3, 12491 absorbed by the "
                      "p-adic refinement around t = 1";
        v.push_back(std::move(psl33));

        return v;
    }();
    return all;
}

const Preset* find_preset(const std::string& name) {
    for (const auto& p : presets())
        if (p.name == name) return &p;
    return nullptr;
}

}  // namespace ilab
