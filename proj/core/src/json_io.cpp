#include "zgrass/json_io.hpp"

#include <json.hpp>

#include "zgrass/freealg.hpp"

namespace zgrass {

using nlohmann::json;

namespace {

json upper_to_json(const UpperIndex& v) {
    if (v.is_infinite()) return json("inf");
    return json(v.value());
}

UpperIndex upper_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return UpperIndex::infinity();
        throw error("upper index must be a number or \"inf\"");
    }
    if (j.is_number_integer()) return UpperIndex::finite(j.get<std::int64_t>());
    throw error("upper index must be a number or \"inf\"");
}

json spec_json(const GradingSpec& spec) {
    json lower = json::array(), upper = json::array();
    for (std::int64_t r : spec.lower()) lower.push_back(r);
    for (const UpperIndex& v : spec.upper()) upper.push_back(upper_to_json(v));
    return json{{"lower", lower}, {"upper", upper}};
}

GradingSpec spec_from(const json& j) {
    if (!j.is_object() || !j.contains("lower") || !j.contains("upper"))
        throw error("grading spec needs \"lower\" and \"upper\" arrays");
    std::vector<std::int64_t> lower;
    std::vector<UpperIndex> upper;
    for (const json& r : j.at("lower")) lower.push_back(r.get<std::int64_t>());
    for (const json& v : j.at("upper")) upper.push_back(upper_from_json(v));
    return GradingSpec(std::move(lower), std::move(upper));
}

json model_json(const FiniteModel& model) {
    json counts = json::array();
    for (std::int64_t c : model.counts()) counts.push_back(c);
    return json{{"spec", spec_json(model.spec())}, {"counts", counts}};
}

json verdict_json(const Verdict& v) {
    json out;
    out["status"] =
        v.status == Verdict::Status::holds_in_scope ? "holds-in-scope" : "counterexample";
    out["scope"] = v.scope;
    out["randomized"] = v.randomized;
    if (v.status == Verdict::Status::counterexample) {
        json asgn = json::array();
        for (const auto& [x, e] : v.assignment)
            asgn.push_back(json{{"var", x.to_string()}, {"value", format(e)}});
        out["assignment"] = asgn;
        out["value"] = v.value ? format(*v.value) : "0";
    }
    return out;
}

json minimal_rep_json(const MinimalRep& r) {
    return json{{"target", r.target}, {"coeffs", r.coeffs}, {"total", r.total}};
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw error("malformed JSON");
    return j;
}

}  // namespace

std::string spec_to_json(const GradingSpec& spec) { return spec_json(spec).dump(); }

GradingSpec spec_from_json(const std::string& text) { return spec_from(parse_text(text)); }

std::string model_to_json(const FiniteModel& model) { return model_json(model).dump(); }

FiniteModel model_from_json(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("spec") || !j.contains("counts"))
        throw error("model needs \"spec\" and \"counts\"");
    std::vector<std::int64_t> counts;
    for (const json& c : j.at("counts")) counts.push_back(c.get<std::int64_t>());
    return FiniteModel(spec_from(j.at("spec")), std::move(counts));
}

std::string support_query_to_json(const SupportQuery& q) {
    json out;
    switch (q.status) {
        case SupportQuery::Status::yes: out["status"] = "yes"; break;
        case SupportQuery::Status::not_found_within_bound:
            out["status"] = "not-found-within-bound";
            break;
        case SupportQuery::Status::exact_no: out["status"] = "exact-no"; break;
    }
    if (q.status == SupportQuery::Status::yes) out["witness"] = q.witness;
    if (!q.reason.empty()) out["reason"] = q.reason;
    return out.dump();
}

std::string subgroup_result_to_json(const SubgroupResult& r) {
    json out;
    switch (r.kind) {
        case SubgroupResult::Kind::subgroup:
            out["kind"] = "subgroup";
            out["d"] = r.d;
            break;
        case SubgroupResult::Kind::not_subgroup: out["kind"] = "not-subgroup"; break;
        case SubgroupResult::Kind::unsupported: out["kind"] = "unsupported"; break;
    }
    if (!r.detail.empty()) out["detail"] = r.detail;
    return out.dump();
}

std::string case_report_to_json(const CaseReport& r) {
    json out;
    out["pair_case"] = to_string(r.pair_case);
    if (r.triple_case) out["triple_case"] = to_string(*r.triple_case);
    out["centrality"] = json{
        {"kind", r.centrality.kind == Centrality::Kind::d_central ? "d-central" : "2d-central"},
        {"d", r.centrality.d},
        {"modulus", r.centrality.modulus()}};
    out["rep_plus"] = minimal_rep_json(r.rep_plus);
    out["rep_minus"] = minimal_rep_json(r.rep_minus);
    if (r.triple_plus) out["triple_plus"] = minimal_rep_json(*r.triple_plus);
    if (r.triple_minus) out["triple_minus"] = minimal_rep_json(*r.triple_minus);
    return out.dump();
}

std::string variety_to_json(const VarietyTag& tag) {
    json out;
    out["name"] = tag.to_string();
    switch (tag.family) {
        case VarietyTag::Family::can: out["family"] = "can"; break;
        case VarietyTag::Family::ref_101: out["family"] = "ref-101"; break;
        case VarietyTag::Family::ref_102: out["family"] = "ref-102"; break;
        case VarietyTag::Family::v1: out["family"] = "v1"; break;
        case VarietyTag::Family::v2: out["family"] = "v2"; break;
    }
    out["k"] = tag.k.is_infinite() ? json("inf") : json(tag.k.value());
    out["d"] = tag.d;
    return out.dump();
}

std::string verdict_to_json(const Verdict& v) { return verdict_json(v).dump(); }

std::string quotient_report_to_json(const QuotientReport& r) {
    return json{{"agree", r.agree},
                {"integral", verdict_json(r.integral)},
                {"quotient", verdict_json(r.quotient)}}
        .dump();
}

std::string scaling_report_to_json(const ScalingReport& r) {
    return json{{"agree", r.agree},
                {"reduced", verdict_json(r.reduced)},
                {"scaled", verdict_json(r.scaled)}}
        .dump();
}

std::string support_compare_to_json(const SupportCompareReport& r) {
    json out;
    out["consistent"] = r.consistent;
    out["criterion"] = parse_text(subgroup_result_to_json(r.criterion));
    out["brute"] = std::vector<std::int64_t>(r.brute.begin(), r.brute.end());
    out["mismatches"] = r.mismatches;
    if (!r.detail.empty()) out["detail"] = r.detail;
    return out.dump();
}

std::string chain_witness_to_json(const ChainWitness& w) {
    json out;
    out["poly"] = format(w.poly);
    out["a"] = w.a;
    out["b"] = w.b;
    out["spec_k1"] = parse_text(spec_to_json(w.spec_k1));
    out["spec_k2"] = parse_text(spec_to_json(w.spec_k2));
    out["at_k1"] = verdict_json(w.at_k1);
    out["at_k2"] = verdict_json(w.at_k2);
    return out.dump();
}

}  // namespace zgrass
