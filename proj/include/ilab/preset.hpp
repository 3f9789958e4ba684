#ifndef ILAB_PRESET_HPP
#define ILAB_PRESET_HPP

#include <optional>
#include <set>

#include "ilab/galois_id.hpp"
#include "ilab/poly.hpp"

namespace ilab {

/// One of the four built-in parametric families.  The polynomial source
/// string is data; parsing it reproduces f exactly.
struct Preset {
    std::string name;
    std::string source;       // polynomial text in the CLI grammar
    std::string param;        // display name of the parameter: "t" or "v"
    std::string claimed_group;
    int degree = 0;
    std::set<Int> exceptional_primes;  // expected N-support, empty when N = 1
    std::optional<Int> tref;           // reference point for refinement
    bool scan_negative = false;        // totally-real hunting direction
    int required_real_roots = -1;
    std::string notes;

    BiPoly poly() const;
    const std::vector<GroupProfile>& candidates() const;
};

const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

}  // namespace ilab

#endif
