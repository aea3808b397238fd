#include "zgrass/support.hpp"

#include <algorithm>
#include <numeric>

#include "enumeration.hpp"

namespace zgrass {

using detail::SearchSpace;
using detail::coefficient_caps;

SupportQuery support_contains(const GradingSpec& spec, std::int64_t z, std::int64_t bound) {
    if (bound < 1) throw error("search bound must be at least 1");
    const auto& r = spec.lower();
    const auto& v = spec.upper();

    std::int64_t g = spec.degree_gcd();
    if (g == 0) {
        // single block of degree 0: the support is exactly {0}
        if (z == 0) return {SupportQuery::Status::yes, std::vector<std::int64_t>(r.size(), 0), ""};
        return {SupportQuery::Status::exact_no, {}, "support is {0}"};
    }
    if (z % g != 0)
        return {SupportQuery::Status::exact_no, {},
                "not a multiple of gcd(r_1,...,r_n) = " + std::to_string(g)};

    // One-sided bounds are exact when the matching blocks are all finite.
    std::int64_t max_reach = 0, min_reach = 0;
    bool max_finite = true, min_finite = true;
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j] > 0) {
            if (v[j].is_infinite()) max_finite = false;
            else max_reach += v[j].value() * r[j];
        } else if (r[j] < 0) {
            if (v[j].is_infinite()) min_finite = false;
            else min_reach += v[j].value() * r[j];
        }
    }
    if (max_finite && z > max_reach)
        return {SupportQuery::Status::exact_no, {},
                "exceeds the largest reachable degree " + std::to_string(max_reach)};
    if (min_finite && z < min_reach)
        return {SupportQuery::Status::exact_no, {},
                "below the smallest reachable degree " + std::to_string(min_reach)};

    SearchSpace space(r, coefficient_caps(spec, bound));
    std::vector<std::int64_t> witness;
    if (space.first(z, witness)) return {SupportQuery::Status::yes, witness, ""};
    return {SupportQuery::Status::not_found_within_bound, {}, ""};
}

SubgroupResult subgroup_test(const GradingSpec& spec) {
    const auto& r = spec.lower();
    const auto& v = spec.upper();
    int n = spec.block_count();
    std::int64_t d = spec.degree_gcd();

    if (n == 1) {
        if (r[0] == 0) return {SubgroupResult::Kind::subgroup, 0, "support is {0}"};
        return {SubgroupResult::Kind::not_subgroup, 0,
                "a single nonzero block degree gives a one-sided support"};
    }
    if (n > 3)
        return {SubgroupResult::Kind::unsupported, 0,
                "no exact criterion for more than three blocks; see the one-sided tests"};

    if (n == 2) {
        if (r[0] < 0 && r[1] > 0 && v[0].is_infinite() && v[1].is_infinite())
            return {SubgroupResult::Kind::subgroup, d, ""};
        return {SubgroupResult::Kind::not_subgroup, 0,
                "needs two unbounded blocks of opposite sign"};
    }

    // n == 3. A straddling pair of unbounded blocks is necessary.
    std::vector<std::size_t> unbounded, bounded;
    for (std::size_t i = 0; i < 3; ++i)
        (v[i].is_infinite() ? unbounded : bounded).push_back(i);
    bool neg = false, pos = false;
    for (std::size_t i : unbounded) {
        if (r[i] < 0) neg = true;
        if (r[i] > 0) pos = true;
    }
    if (!neg || !pos)
        return {SubgroupResult::Kind::not_subgroup, 0,
                "no unbounded pair of blocks straddles zero"};
    if (unbounded.size() == 3) return {SubgroupResult::Kind::subgroup, d, ""};

    // Exactly one bounded block left; the unbounded pair straddles zero.
    std::size_t finite = bounded[0];
    std::int64_t dprime = gcd64(r[unbounded[0]], r[unbounded[1]]);
    std::int64_t rf = r[finite];
    if (rf % dprime == 0) return {SubgroupResult::Kind::subgroup, d, ""};
    // After dividing out d the whole picture has gcd 1, and the bounded block
    // must cover the dprime/d residue classes it generates.
    std::int64_t classes = dprime / d;
    if (v[finite].at_least(classes - 1))
        return {SubgroupResult::Kind::subgroup, d, ""};
    return {SubgroupResult::Kind::not_subgroup, 0,
            "bounded block covers too few residue classes mod " + std::to_string(dprime)};
}

FullSupport3 full_support_3(std::int64_t r1, std::int64_t r2, std::int64_t r3,
                            UpperIndex v2) {
    if (!(r1 < r2 && r2 < r3)) throw error("block degrees must be strictly increasing");
    if (!(r1 < 0 && 0 < r3)) throw error("needs r1 < 0 < r3");
    if (gcd64(gcd64(r1, r2), r3) != 1)
        throw error("block degrees must be coprime as a triple");
    std::int64_t dprime = gcd64(r1, r3);
    if (dprime == 1) return {true, FullSupportCase::a, dprime};
    // gcd(r1,r2,r3) = 1 with dprime > 1 forces r2 off the lattice <dprime>.
    if (v2.at_least(dprime - 1)) return {true, FullSupportCase::b, dprime};
    return {false, std::nullopt, dprime};
}

bool satisfies_bhat(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 1 || b < 1) throw error("a and b must be positive");
    if (!(-b < c && c < a)) throw error("c must satisfy -b < c < a");
    if (std::gcd(gcd64(a, b), c < 0 ? -c : c) != 1) return false;
    return gcd64(a, b) > 1 && gcd64(a, c) > 1 && gcd64(b, c) > 1;
}

std::optional<MinimalRep> minimal_rep(const std::vector<std::int64_t>& generators,
                                      std::int64_t target, std::int64_t bound) {
    if (generators.empty()) throw error("no generators");
    if (bound < 1) throw error("search bound must be at least 1");
    SearchSpace space(generators, std::vector<std::int64_t>(generators.size(), bound));
    std::optional<MinimalRep> best;
    space.each(target, [&](const std::vector<std::int64_t>& coeffs) {
        std::int64_t total = std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0});
        // lexicographic scan: the first hit at a given total is the lex-least
        if (!best || total < best->total) best = MinimalRep{target, coeffs, total};
    });
    return best;
}

const char* to_string(PairCase c) {
    switch (c) {
        case PairCase::c1: return "(1')";
        case PairCase::c2: return "(2')";
        case PairCase::c3: return "(3')";
        case PairCase::c4: return "(4')";
    }
    return "?";
}

const char* to_string(TripleCase c) {
    switch (c) {
        case TripleCase::c1: return "(1)";
        case TripleCase::c2: return "(2)";
        case TripleCase::c3: return "(3)";
        case TripleCase::c4: return "(4)";
    }
    return "?";
}

namespace {

template <typename Case>
Case case_of(bool plus_even, bool minus_even) {
    if (plus_even && minus_even) return Case::c1;
    if (plus_even) return Case::c2;
    if (minus_even) return Case::c3;
    return Case::c4;
}

}  // namespace

CaseReport classify_pair(std::int64_t a, std::int64_t b, std::int64_t bound) {
    if (a < 1 || b < 1) throw error("a and b must be positive");
    std::int64_t d = gcd64(a, b);
    std::vector<std::int64_t> gens{a, -b};
    auto rp = minimal_rep(gens, d, bound);
    auto rm = minimal_rep(gens, -d, bound);
    if (!rp || !rm)
        throw error("no representation of the gcd within bound " + std::to_string(bound));
    PairCase pc = case_of<PairCase>(rp->total % 2 == 0, rm->total % 2 == 0);
    Centrality cen{Centrality::Kind::d_central, d};
    if (pc == PairCase::c4 && ((a / d) % 2 != 0 && (b / d) % 2 != 0))
        cen.kind = Centrality::Kind::two_d_central;
    return CaseReport{pc, std::nullopt, cen, *rp, *rm, std::nullopt, std::nullopt};
}

CaseReport classify_cases(std::int64_t a, std::int64_t b, std::int64_t c,
                          std::int64_t d, std::int64_t bound) {
    if (d != gcd64(a, b))
        throw error("d = " + std::to_string(d) + " is not gcd(a, b)");
    CaseReport report = classify_pair(a, b, bound);
    if (std::gcd(d, c < 0 ? -c : c) == 1) {
        std::vector<std::int64_t> gens{a, -b, c};
        auto tp = minimal_rep(gens, 1, bound);
        auto tm = minimal_rep(gens, -1, bound);
        if (!tp || !tm)
            throw error("no representation of +-1 within bound " + std::to_string(bound));
        report.triple_case = case_of<TripleCase>(tp->total % 2 == 0, tm->total % 2 == 0);
        report.triple_plus = tp;
        report.triple_minus = tm;
    }
    return report;
}

std::string VarietyTag::to_string() const {
    switch (family) {
        case Family::can: return "V_can";
        case Family::ref_101: return "V_(-1,0,1)^(inf," + k.to_string() + ",inf)";
        case Family::ref_102: return "V_(-1,0,2)^(inf," + k.to_string() + ",inf)";
        case Family::v1: return "V_{1," + k.to_string() + "}";
        case Family::v2: return "V_{2," + k.to_string() + "}";
    }
    return "?";
}

VarietyTag variety_of(std::int64_t a, std::int64_t b, std::int64_t c, UpperIndex k) {
    if (a < 1 || b < 1) throw error("a and b must be positive");
    if (!(-b < c && c < a)) throw error("c must satisfy -b < c < a");
    FullSupport3 fs = full_support_3(-b, c, a, k);
    if (!fs.full) throw error("grading is not of full support");
    std::int64_t d = gcd64(a, b);
    bool ab_even = (a % 2 == 0) || (b % 2 == 0);
    bool c_even = (c % 2 == 0);
    bool abc_odd = !ab_even && !c_even;

    if (fs.tag == FullSupportCase::a) {
        if (!k.is_infinite()) {
            if (!ab_even && c_even) return {VarietyTag::Family::ref_101, k, d};
            if (ab_even) return {VarietyTag::Family::ref_102, k, d};
            return {VarietyTag::Family::can, k, d};
        }
        if (abc_odd) return {VarietyTag::Family::can, k, d};
        return {VarietyTag::Family::ref_102, k, d};
    }
    if (k.is_infinite()) {
        if (abc_odd) return {VarietyTag::Family::can, k, d};
        return {VarietyTag::Family::ref_102, k, d};
    }
    bool quot_even = ((a / d) % 2 == 0) || ((b / d) % 2 == 0);
    if (quot_even) return {VarietyTag::Family::v1, k, d};
    return {VarietyTag::Family::v2, k, d};
}

bool full_support_sufficient(const GradingSpec& spec) {
    const auto& r = spec.lower();
    const auto& v = spec.upper();
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] >= 0 || !v[i].is_infinite()) continue;
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r[j] <= 0 || !v[j].is_infinite()) continue;
            if (gcd64(r[i], r[j]) == 1) return true;
        }
    }
    return false;
}

bool subgroup_necessary(const GradingSpec& spec) {
    const auto& r = spec.lower();
    const auto& v = spec.upper();
    bool neg = false, pos = false;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!v[i].is_infinite()) continue;
        if (r[i] < 0) neg = true;
        if (r[i] > 0) pos = true;
    }
    return neg && pos;
}

}  // namespace zgrass
