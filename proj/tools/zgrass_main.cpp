// Command-line front end: support queries, case classification, variety
// dispatch, identity-family generation, brute-force verification, the
// quotient/scaling/support cross-checks, and chain witnesses.
//
// Exit codes: 0 success, 1 negative mathematical verdict (counterexample,
// membership not established, cross-check disagreement), 2 usage or input
// errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "zgrass/freealg.hpp"
#include "zgrass/json_io.hpp"
#include "zgrass/support.hpp"
#include "zgrass/verify.hpp"

namespace {

using nlohmann::json;
using namespace zgrass;

constexpr int kSchemaVersion = 1;

// Inline JSON, or a path to a file holding it.
std::string load_inline_or_file(const std::string& arg) {
    std::string trimmed = arg;
    auto pos = trimmed.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && (trimmed[pos] == '{' || trimmed[pos] == '['))
        return trimmed;
    std::ifstream in(arg);
    if (!in) throw error("cannot open file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(bool as_json, const std::string& command, const json& result,
          const std::string& text) {
    if (as_json) {
        json envelope{{"schema", kSchemaVersion}, {"command", command}, {"result", result}};
        std::cout << envelope.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

json jparse(const std::string& text) { return json::parse(text); }

UpperIndex parse_k(const std::string& k) {
    if (k == "inf") return UpperIndex::infinity();
    return UpperIndex::finite(std::stoll(k));
}

struct CommonFlags {
    int rank = 10;
    int length_cap = -1;  // -1: derive from polynomial degree
    std::int64_t bound = 40;
    std::int64_t window = 40;
    int degree_bound = 4;
    std::uint64_t seed = 1;
    int threads = 1;
    bool as_json = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--rank", rank, "Model rank when counts are synthesized");
        cmd->add_option("--length-cap", length_cap, "Monomial length cap for verification");
        cmd->add_option("--bound", bound, "Coefficient bound for support searches");
        cmd->add_option("--window", window, "Degree window for support comparisons");
        cmd->add_option("--degree-bound", degree_bound, "Degree bound for identity families");
        cmd->add_option("--seed", seed, "Seed for randomized checks");
        cmd->add_option("--threads", threads, "Worker threads for verification");
        cmd->add_flag("--json", as_json, "Emit a JSON envelope");
    }

    Scope scope_for(int poly_degree) const {
        Scope s = Scope::for_degree(poly_degree);
        if (length_cap >= 0) s.length_cap = length_cap;
        s.seed = seed;
        s.threads = threads;
        return s;
    }
};

IdentityFamily family_from_flags(const std::string& name, std::int64_t a, std::int64_t b,
                                 std::int64_t c, std::int64_t k, std::int64_t d) {
    if (name == "can") return IdentityFamily::canonical();
    if (name == "v1") return IdentityFamily::v1(a, b, c, k);
    if (name == "v2") return IdentityFamily::v2(a, b, c, k);
    if (name == "scaled-can") return IdentityFamily::scaled(d, IdentityFamily::canonical());
    throw error("unknown family: " + name + " (use can, v1, v2, scaled-can)");
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Z-graded Grassmann algebra toolkit"};
    app.require_subcommand(1);

    // ---- support-check ----
    auto* sc = app.add_subcommand("support-check",
                                  "Decide whether a degree lies in the support");
    CommonFlags sc_flags;
    std::string sc_spec;
    std::int64_t sc_z = 0;
    sc->add_option("--spec", sc_spec, "Grading spec (JSON text or file)")->required();
    sc->add_option("--z", sc_z, "Degree to test")->required();
    sc_flags.attach(sc);

    // ---- classify ----
    auto* cl = app.add_subcommand("classify", "Parity case classification and centrality");
    CommonFlags cl_flags;
    std::int64_t cl_a = 0, cl_b = 0, cl_c = 0;
    std::string cl_k = "inf";
    cl->add_option("--a", cl_a)->required();
    cl->add_option("--b", cl_b)->required();
    cl->add_option("--c", cl_c)->required();
    cl->add_option("--k", cl_k, "Middle multiplicity (number or inf)");
    cl_flags.attach(cl);

    // ---- variety ----
    auto* vr = app.add_subcommand("variety", "Variety generated by a full-support grading");
    CommonFlags vr_flags;
    std::int64_t vr_a = 0, vr_b = 0, vr_c = 0;
    std::string vr_k = "inf";
    vr->add_option("--a", vr_a)->required();
    vr->add_option("--b", vr_b)->required();
    vr->add_option("--c", vr_c)->required();
    vr->add_option("--k", vr_k, "Middle multiplicity (number or inf)")->required();
    vr_flags.attach(vr);

    // ---- gen-identities ----
    auto* gi = app.add_subcommand("gen-identities", "Enumerate an identity family");
    CommonFlags gi_flags;
    std::string gi_family;
    std::int64_t gi_a = 0, gi_b = 0, gi_c = 0, gi_k = 0, gi_d = 2;
    gi->add_option("--family", gi_family, "can | v1 | v2 | scaled-can")->required();
    gi->add_option("--a", gi_a);
    gi->add_option("--b", gi_b);
    gi->add_option("--c", gi_c);
    gi->add_option("--k", gi_k);
    gi->add_option("--d", gi_d, "Scaling modulus for scaled-can");
    gi_flags.attach(gi);

    // ---- verify ----
    auto* vf = app.add_subcommand("verify", "Check a graded polynomial identity");
    CommonFlags vf_flags;
    std::string vf_model, vf_poly;
    vf->add_option("--model", vf_model, "Model (JSON text or file)")->required();
    vf->add_option("--poly", vf_poly, "Polynomial text")->required();
    vf_flags.attach(vf);

    // ---- cross-check ----
    auto* cc = app.add_subcommand("cross-check",
                                  "Quotient, scaling, or support cross-checks");
    CommonFlags cc_flags;
    std::string cc_mode, cc_model, cc_spec, cc_poly, cc_counts;
    std::int64_t cc_d = 2;
    cc->add_option("--mode", cc_mode, "quotient | scaling | support")->required();
    cc->add_option("--model", cc_model, "Model for quotient mode");
    cc->add_option("--spec", cc_spec, "Spec for scaling/support modes");
    cc->add_option("--counts", cc_counts, "Counts for scaling mode, e.g. '[4,2,4]'");
    cc->add_option("--poly", cc_poly, "Polynomial for quotient/scaling modes");
    cc->add_option("--d", cc_d, "Modulus");
    cc_flags.attach(cc);

    // ---- chain ----
    auto* ch = app.add_subcommand("chain",
                                  "Witness separating two middle multiplicities");
    CommonFlags ch_flags;
    std::int64_t ch_d = 2, ch_c = 0, ch_k1 = 0, ch_k2 = 0;
    ch->add_option("--d", ch_d)->required();
    ch->add_option("--c", ch_c)->required();
    ch->add_option("--k1", ch_k1)->required();
    ch->add_option("--k2", ch_k2)->required();
    ch_flags.attach(ch);

    CLI11_PARSE(app, argc, argv);

    if (sc->parsed()) {
        GradingSpec spec = spec_from_json(load_inline_or_file(sc_spec));
        SupportQuery q = support_contains(spec, sc_z, sc_flags.bound);
        std::string text;
        if (q.status == SupportQuery::Status::yes) {
            text = "yes: witness alpha = [";
            for (std::size_t i = 0; i < q.witness.size(); ++i)
                text += (i ? "," : "") + std::to_string(q.witness[i]);
            text += "]";
        } else if (q.status == SupportQuery::Status::exact_no) {
            text = "no: " + q.reason;
        } else {
            text = "not found within coefficient bound " + std::to_string(sc_flags.bound);
        }
        emit(sc_flags.as_json, "support-check", jparse(support_query_to_json(q)), text);
        return q.status == SupportQuery::Status::yes ? 0 : 1;
    }

    if (cl->parsed()) {
        std::int64_t d = gcd64(cl_a, cl_b);
        CaseReport rep = classify_cases(cl_a, cl_b, cl_c, d, cl_flags.bound);
        json result = jparse(case_report_to_json(rep));
        result["bhat"] = satisfies_bhat(cl_a, cl_b, cl_c);
        UpperIndex k = parse_k(cl_k);
        std::string vtext;
        try {
            VarietyTag tag = variety_of(cl_a, cl_b, cl_c, k);
            result["variety"] = jparse(variety_to_json(tag));
            vtext = ", variety " + tag.to_string();
        } catch (const error& e) {
            result["variety"] = nullptr;
            vtext = std::string(", no variety (") + e.what() + ")";
        }
        std::ostringstream text;
        text << "pair case " << to_string(rep.pair_case);
        if (rep.triple_case) text << ", triple case " << to_string(*rep.triple_case);
        text << ", " << (rep.centrality.kind == Centrality::Kind::d_central ? "d" : "2d")
             << "-central with d = " << rep.centrality.d
             << ", Bhat " << (result["bhat"].get<bool>() ? "true" : "false") << vtext;
        emit(cl_flags.as_json, "classify", result, text.str());
        return 0;
    }

    if (vr->parsed()) {
        VarietyTag tag = variety_of(vr_a, vr_b, vr_c, parse_k(vr_k));
        emit(vr_flags.as_json, "variety", jparse(variety_to_json(tag)), tag.to_string());
        return 0;
    }

    if (gi->parsed()) {
        IdentityFamily family = family_from_flags(gi_family, gi_a, gi_b, gi_c, gi_k, gi_d);
        auto instances = gen_identities(family, gi_flags.degree_bound, gi_flags.window);
        if (gi_flags.as_json) {
            json arr = json::array();
            for (const auto& p : instances) arr.push_back(format(p));
            emit(true, "gen-identities", json{{"count", instances.size()}, {"instances", arr}},
                 "");
        } else {
            for (const auto& p : instances) std::cout << format(p) << "\n";
        }
        return 0;
    }

    if (vf->parsed()) {
        FiniteModel model = model_from_json(load_inline_or_file(vf_model));
        GradedPolynomial poly = parse_poly(vf_poly);
        Scope scope = vf_flags.scope_for(poly.degree());
        Verdict v = is_graded_identity(poly, model, scope);
        std::string text = v.holds()
                               ? "holds in scope (" + v.scope + ")"
                               : "counterexample: value " + format(*v.value);
        emit(vf_flags.as_json, "verify", jparse(verdict_to_json(v)), text);
        return v.holds() ? 0 : 1;
    }

    if (cc->parsed()) {
        if (cc_mode == "quotient") {
            if (cc_model.empty() || cc_poly.empty())
                throw error("quotient mode needs --model and --poly");
            FiniteModel model = model_from_json(load_inline_or_file(cc_model));
            GradedPolynomial poly = parse_poly(cc_poly);
            QuotientReport rep =
                check_quotient(poly, model, cc_d, cc_flags.scope_for(poly.degree()));
            emit(cc_flags.as_json, "cross-check", jparse(quotient_report_to_json(rep)),
                 rep.agree ? "verdicts agree" : "verdicts disagree");
            return rep.agree ? 0 : 1;
        }
        if (cc_mode == "scaling") {
            if (cc_spec.empty() || cc_poly.empty() || cc_counts.empty())
                throw error("scaling mode needs --spec, --counts and --poly");
            GradingSpec spec = spec_from_json(load_inline_or_file(cc_spec));
            GradedPolynomial poly = parse_poly(cc_poly);
            std::vector<std::int64_t> counts;
            for (const json& c : jparse(cc_counts)) counts.push_back(c.get<std::int64_t>());
            ScalingReport rep =
                check_scaling(poly, spec, counts, cc_d, cc_flags.scope_for(poly.degree()));
            emit(cc_flags.as_json, "cross-check", jparse(scaling_report_to_json(rep)),
                 rep.agree ? "verdicts agree" : "verdicts disagree");
            return rep.agree ? 0 : 1;
        }
        if (cc_mode == "support") {
            if (cc_spec.empty()) throw error("support mode needs --spec");
            GradingSpec spec = spec_from_json(load_inline_or_file(cc_spec));
            SupportCompareReport rep =
                compare_support(spec, cc_flags.window, cc_flags.bound);
            emit(cc_flags.as_json, "cross-check", jparse(support_compare_to_json(rep)),
                 rep.consistent ? "criterion and search agree"
                                : "MISMATCH: " + rep.detail);
            return rep.consistent ? 0 : 1;
        }
        throw error("unknown mode: " + cc_mode);
    }

    if (ch->parsed()) {
        ChainWitness w = chain_witness(ch_d, ch_c, ch_k1, ch_k2);
        std::string text = "witness " + format(w.poly) + " separates k=" +
                           std::to_string(ch_k1) + " from k=" + std::to_string(ch_k2);
        emit(ch_flags.as_json, "chain", jparse(chain_witness_to_json(w)), text);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const zgrass::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
