#ifndef ZGRASS_JSON_IO_HPP
#define ZGRASS_JSON_IO_HPP

#include <string>

#include "zgrass/grading.hpp"
#include "zgrass/support.hpp"
#include "zgrass/verify.hpp"

namespace zgrass {

// JSON wire formats. Specs serialize as {"lower":[-3,1,6],"upper":["inf",2,"inf"]}
// with "inf" the literal string for an unbounded block; models wrap a spec with
// {"spec":...,"counts":[4,2,4]}. All functions below speak JSON text so the
// public headers stay free of the JSON library.

std::string spec_to_json(const GradingSpec& spec);
GradingSpec spec_from_json(const std::string& text);

std::string model_to_json(const FiniteModel& model);
FiniteModel model_from_json(const std::string& text);

std::string support_query_to_json(const SupportQuery& q);
std::string subgroup_result_to_json(const SubgroupResult& r);
std::string case_report_to_json(const CaseReport& r);
std::string variety_to_json(const VarietyTag& tag);
std::string verdict_to_json(const Verdict& v);
std::string quotient_report_to_json(const QuotientReport& r);
std::string scaling_report_to_json(const ScalingReport& r);
std::string support_compare_to_json(const SupportCompareReport& r);
std::string chain_witness_to_json(const ChainWitness& w);

}  // namespace zgrass

#endif
