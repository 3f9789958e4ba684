#ifndef ILAB_REPRODUCE_HPP
#define ILAB_REPRODUCE_HPP

#include "ilab/json_io.hpp"

namespace ilab {

/// One audited value of a preset family: the check either reproduces it or
/// fails with the recomputed ground truth in `detail`.  `documented` marks
/// the known misprints that are expected to fail (see README).
struct Check {
    std::string name;
    bool pass = false;
    bool documented = false;
    std::string detail;
};

std::vector<Check> s3_checks();
std::vector<Check> a5_checks();
std::vector<Check> psl27_checks();
std::vector<Check> psl33_checks();
std::vector<Check> group_fact_checks();

std::vector<Check> preset_checks(const std::string& name);

Json to_json(const std::vector<Check>& checks);

}  // namespace ilab

#endif
