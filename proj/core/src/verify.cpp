#include "zgrass/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "enumeration.hpp"

namespace zgrass {

Scope Scope::for_degree(int poly_degree) {
    Scope s;
    s.length_cap = poly_degree <= 3 ? 4 : 3;
    return s;
}

std::string Scope::describe(const FiniteModel& model) const {
    std::ostringstream os;
    os << "rank " << model.rank() << ", length cap " << length_cap;
    return os.str();
}

namespace {

// Multiplies basis monomials left to right; the supports are known disjoint,
// so only the sign parity is tracked.
int word_sign(const std::vector<Monomial>& chosen, const std::vector<int>& order) {
    std::uint64_t acc = 0;
    int inv = 0;
    for (int idx : order) {
        std::uint64_t b = chosen[static_cast<std::size_t>(idx)].bits();
        std::uint64_t a = acc;
        while (a) {
            std::uint64_t low = a & -a;
            inv += std::popcount(b & (low - 1));
            a ^= low;
        }
        acc |= b;
    }
    return (inv % 2 == 0) ? 1 : -1;
}

struct WordPlan {
    std::vector<int> order;  // word positions -> index into the sorted variable list
    Rational coeff;
    long long lcoeff = 0;
    bool small = false;
};

struct MultilinearCheck {
    const FiniteModel& model;
    const Scope& scope;
    std::vector<GVar> vars;
    std::vector<std::vector<Monomial>> cands;
    std::vector<WordPlan> words;
    bool all_small = true;

    // Exact coefficient of the (common) product monomial for one tuple.
    Rational value_at(const std::vector<Monomial>& chosen) const {
        Rational total = 0;
        for (const WordPlan& w : words) {
            int s = word_sign(chosen, w.order);
            total += (s > 0) ? w.coeff : Rational(-w.coeff);
        }
        return total;
    }

    bool nonzero_at(const std::vector<Monomial>& chosen) const {
        if (all_small) {
            long long total = 0;
            for (const WordPlan& w : words)
                total += word_sign(chosen, w.order) * w.lcoeff;
            return total != 0;
        }
        return !is_zero(value_at(chosen));
    }

    // First counterexample tuple in lexicographic candidate order, with the
    // first variable restricted to [lo, hi).
    bool search(std::size_t lo, std::size_t hi, std::vector<Monomial>& chosen) const {
        chosen.assign(vars.size(), Monomial::unit());
        return dfs(0, 0, lo, hi, chosen);
    }

private:
    bool dfs(std::size_t p, std::uint64_t used, std::size_t lo, std::size_t hi,
             std::vector<Monomial>& chosen) const {
        if (p == vars.size()) return nonzero_at(chosen);
        std::size_t begin = (p == 0) ? lo : 0;
        std::size_t end = (p == 0) ? hi : cands[p].size();
        for (std::size_t i = begin; i < end; ++i) {
            Monomial m = cands[p][i];
            if (used & m.bits()) continue;  // overlapping supports vanish termwise
            chosen[p] = m;
            if (dfs(p + 1, used | m.bits(), lo, hi, chosen)) return true;
        }
        return false;
    }
};

std::vector<Monomial> candidates_for(const GVar& x, const FiniteModel& model,
                                     int length_cap) {
    if (x.grade.modular)
        return model.component_basis_mod(x.grade.value, x.grade.mod, length_cap);
    return model.component_basis(x.grade.value, length_cap);
}

Verdict counterexample_verdict(const MultilinearCheck& chk,
                               const std::vector<Monomial>& chosen,
                               const FiniteModel& model, const Scope& scope) {
    Verdict v;
    v.status = Verdict::Status::counterexample;
    v.scope = scope.describe(model);
    std::uint64_t all = 0;
    for (std::size_t i = 0; i < chk.vars.size(); ++i) {
        v.assignment.emplace_back(chk.vars[i], Element::monomial(model.rank(), chosen[i]));
        all |= chosen[i].bits();
    }
    v.value = Element::monomial(model.rank(), Monomial::from_bits(all),
                                chk.value_at(chosen));
    return v;
}

Verdict holds_verdict(const FiniteModel& model, const Scope& scope, bool randomized) {
    Verdict v;
    v.status = Verdict::Status::holds_in_scope;
    v.scope = scope.describe(model);
    v.randomized = randomized;
    return v;
}

Verdict check_multilinear(const GradedPolynomial& f, const FiniteModel& model,
                          const Scope& scope) {
    MultilinearCheck chk{model, scope, f.variables(), {}, {}, true};
    for (const GVar& x : chk.vars) {
        chk.cands.push_back(candidates_for(x, model, scope.length_cap));
        if (chk.cands.back().empty()) return holds_verdict(model, scope, false);
    }
    for (const auto& [w, c] : f.terms()) {
        WordPlan plan;
        plan.coeff = c;
        for (const GVar& x : w) {
            auto it = std::lower_bound(chk.vars.begin(), chk.vars.end(), x);
            plan.order.push_back(static_cast<int>(it - chk.vars.begin()));
        }
        if (c.get_den() == 1 && c.get_num().fits_slong_p()) {
            plan.small = true;
            plan.lcoeff = c.get_num().get_si();
        } else {
            chk.all_small = false;
        }
        chk.words.push_back(std::move(plan));
    }
    if (!chk.all_small)
        for (WordPlan& w : chk.words) w.small = false;

    std::size_t n0 = chk.cands[0].size();
    int threads = std::max(1, scope.threads);
    if (threads == 1 || n0 < 2) {
        std::vector<Monomial> chosen;
        if (chk.search(0, n0, chosen))
            return counterexample_verdict(chk, chosen, model, scope);
        return holds_verdict(model, scope, false);
    }

    // Deterministic parallel split over the first variable: the hit from the
    // earliest chunk is the canonical first counterexample.
    std::size_t t = std::min<std::size_t>(static_cast<std::size_t>(threads), n0);
    std::vector<std::vector<Monomial>> found(t);
    std::vector<char> hit(t, 0);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < t; ++i) {
        std::size_t lo = i * n0 / t, hi = (i + 1) * n0 / t;
        pool.emplace_back([&, i, lo, hi] {
            std::vector<Monomial> chosen;
            if (chk.search(lo, hi, chosen)) {
                found[i] = chosen;
                hit[i] = 1;
            }
        });
    }
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < t; ++i)
        if (hit[i]) return counterexample_verdict(chk, found[i], model, scope);
    return holds_verdict(model, scope, false);
}

Verdict check_randomized(const GradedPolynomial& f, const FiniteModel& model,
                         const Scope& scope) {
    std::vector<GVar> vars = f.variables();
    std::vector<std::vector<Monomial>> cands;
    for (const GVar& x : vars) cands.push_back(candidates_for(x, model, scope.length_cap));

    std::mt19937_64 rng(scope.seed);
    for (int s = 0; s < scope.random_samples; ++s) {
        std::map<GVar, Element> asgn;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            Element e(model.rank());
            if (!cands[i].empty()) {
                std::size_t picks = 1 + rng() % 2;
                for (std::size_t p = 0; p < picks; ++p) {
                    Monomial m = cands[i][rng() % cands[i].size()];
                    long coeff = static_cast<long>(1 + rng() % 3);
                    if (rng() % 2) coeff = -coeff;
                    e.add_term(m, Rational(coeff));
                }
            }
            asgn.emplace(vars[i], std::move(e));
        }
        Element value = evaluate(f, asgn, model);
        if (!value.is_zero()) {
            Verdict v;
            v.status = Verdict::Status::counterexample;
            v.scope = scope.describe(model);
            v.randomized = true;
            for (const auto& [x, e] : asgn) v.assignment.emplace_back(x, e);
            v.value = value;
            return v;
        }
    }
    return holds_verdict(model, scope, true);
}

}  // namespace

Verdict is_graded_identity(const GradedPolynomial& f, const FiniteModel& model,
                           const Scope& scope) {
    if (scope.length_cap < 0) throw error("length cap must be non-negative");
    if (f.is_zero()) return holds_verdict(model, scope, false);
    if (f.is_multilinear()) return check_multilinear(f, model, scope);
    return check_randomized(f, model, scope);
}

namespace {

// A model presented as three sorted blocks (-b, c, a)^(inf, k, inf) with
// coprime degrees is d-central exactly for the multiples d of the modulus
// derived from the pair classification. Models outside that shape are not
// validated.
void require_central(const FiniteModel& model, std::int64_t d) {
    const GradingSpec& spec = model.spec();
    const auto& r = spec.lower();
    const auto& v = spec.upper();
    if (spec.block_count() == 3) {
        if (!(v[0].is_infinite() && v[2].is_infinite())) return;
        if (!(r[0] < 0 && 0 < r[2])) return;
        if (gcd64(gcd64(r[0], r[1]), r[2]) != 1) return;
        FullSupport3 fs = full_support_3(r[0], r[1], r[2], v[1]);
        if (!fs.full)
            throw error("model is not of full support, hence not central for any modulus");
        CaseReport rep = classify_pair(r[2], -r[0]);
        std::int64_t m = rep.centrality.modulus();
        if (d % m != 0)
            throw error("model is " + std::to_string(m) + "-central, not " +
                        std::to_string(d) + "-central");
    }
}

}  // namespace

QuotientReport check_quotient(const GradedPolynomial& f, const FiniteModel& model,
                              std::int64_t d, const Scope& scope) {
    if (d < 1) throw error("modulus must be at least 1");
    auto tag = f.group();
    if (tag && tag->modular) throw error("check_quotient expects an integer-graded polynomial");
    if (!f.is_multilinear()) throw error("check_quotient expects a multilinear polynomial");
    require_central(model, d);
    QuotientReport rep{false, is_graded_identity(f, model, scope),
                       is_graded_identity(pi_d(f, d), model, scope)};
    rep.agree = rep.integral.status == rep.quotient.status;
    return rep;
}

ScalingReport check_scaling(const GradedPolynomial& f, const GradingSpec& scaled_spec,
                            const std::vector<std::int64_t>& counts, std::int64_t d,
                            const Scope& scope) {
    if (d < 1) throw error("scaling modulus must be at least 1");
    auto tag = f.group();
    if (tag && tag->modular) throw error("check_scaling expects an integer-graded polynomial");
    if (!f.is_multilinear()) throw error("check_scaling expects a multilinear polynomial");
    std::vector<std::int64_t> reduced;
    for (std::int64_t rj : scaled_spec.lower()) {
        if (rj % d != 0)
            throw error("lower index " + std::to_string(rj) + " is not a multiple of " +
                        std::to_string(d));
        reduced.push_back(rj / d);
    }
    FiniteModel model_reduced(GradingSpec(reduced, scaled_spec.upper()), counts);
    FiniteModel model_scaled(scaled_spec, counts);
    ScalingReport rep{false, is_graded_identity(f, model_reduced, scope),
                      is_graded_identity(phi_d(f, d), model_scaled, scope)};
    rep.agree = rep.reduced.status == rep.scaled.status;
    return rep;
}

std::set<std::int64_t> support_bruteforce(const FiniteModel& model, int max_length) {
    std::set<std::int64_t> out;
    for (int l = 0; l <= std::min(max_length, model.rank()); ++l) {
        // combinations in lex order
        if (l == 0) {
            out.insert(0);
            continue;
        }
        std::vector<int> idx(static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            out.insert(model.degree(Monomial::from_indices(idx)));
            int j = l - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == model.rank() - (l - 1 - j))
                --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (int q = j + 1; q < l; ++q)
                idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    return out;
}

std::set<std::int64_t> spec_support_window(const GradingSpec& spec, std::int64_t window,
                                           std::int64_t bound) {
    if (window < 0 || bound < 1) throw error("window and bound must be positive");
    detail::SearchSpace space(spec.lower(), detail::coefficient_caps(spec, bound));
    std::set<std::int64_t> out;
    space.each_sum_within(window, [&](std::int64_t sum, const auto&) { out.insert(sum); });
    return out;
}

namespace {

std::set<std::int64_t> lattice_window(std::int64_t d, std::int64_t window) {
    std::set<std::int64_t> out;
    for (std::int64_t z = -window; z <= window; ++z)
        if (d == 0 ? z == 0 : z % d == 0) out.insert(z);
    return out;
}

}  // namespace

SupportCompareReport compare_support(const GradingSpec& spec, std::int64_t window,
                                     std::int64_t bound) {
    SupportCompareReport rep;
    rep.brute = spec_support_window(spec, window, bound);
    rep.criterion = subgroup_test(spec);
    rep.consistent = true;
    std::int64_t d = spec.degree_gcd();

    switch (rep.criterion.kind) {
        case SubgroupResult::Kind::subgroup: {
            std::set<std::int64_t> predicted = lattice_window(rep.criterion.d, window);
            std::set_symmetric_difference(rep.brute.begin(), rep.brute.end(),
                                          predicted.begin(), predicted.end(),
                                          std::back_inserter(rep.mismatches));
            rep.consistent = rep.mismatches.empty();
            if (!rep.consistent) rep.detail = "search disagrees with the predicted lattice";
            break;
        }
        case SubgroupResult::Kind::not_subgroup: {
            // The search must miss part of the gcd lattice inside the window.
            std::set<std::int64_t> full = lattice_window(d, window);
            if (rep.brute == full) {
                rep.consistent = false;
                rep.detail = "criterion says not a subgroup, but the window shows the full lattice";
            }
            break;
        }
        case SubgroupResult::Kind::unsupported: {
            if (!subgroup_necessary(spec) && rep.brute == lattice_window(d, window)) {
                rep.consistent = false;
                rep.detail = "necessary condition fails, yet the window shows the full lattice";
            }
            if (full_support_sufficient(spec) && d == 1 &&
                rep.brute != lattice_window(1, window)) {
                rep.consistent = false;
                rep.detail = "sufficient condition holds, yet the window is incomplete";
            }
            break;
        }
    }

    // Independent cross-check against the three-block criterion.
    const auto& r = spec.lower();
    const auto& v = spec.upper();
    if (spec.block_count() == 3 && v[0].is_infinite() && v[2].is_infinite() &&
        r[0] < 0 && 0 < r[2] && gcd64(gcd64(r[0], r[1]), r[2]) == 1) {
        FullSupport3 fs = full_support_3(r[0], r[1], r[2], v[1]);
        bool window_full = rep.brute == lattice_window(1, window);
        if (fs.full != window_full) {
            rep.consistent = false;
            rep.detail = "three-block criterion disagrees with the search window";
        }
    }
    return rep;
}

ChainWitness chain_witness(std::int64_t d, std::int64_t c, std::int64_t k1,
                           std::int64_t k2) {
    if (d < 2) throw error("needs d >= 2");
    if (k1 >= k2) throw error("needs k1 < k2");
    if (k1 < d - 1) throw error("needs k1 >= d - 1");
    if (gcd64(c, d) != 1) throw error("needs gcd(c, d) = 1");

    // Smallest ambient pair (a, b) with gcd(a, b) = d and -b < c < a; the
    // triple gcd is then gcd(d, c) = 1 automatically.
    std::int64_t a = 0, b = 0;
    for (std::int64_t ca = d; ca <= 64 * d && a == 0; ca += d)
        for (std::int64_t cb = d; cb <= 64 * d; cb += d)
            if (ca > c && cb > -c && gcd64(ca, cb) == d) {
                a = ca;
                b = cb;
                break;
            }
    if (a == 0) throw error("no ambient pair found");

    GradedPolynomial poly;
    Word word;
    for (std::int64_t i = 0; i < k1 + 1; ++i)
        word.push_back(GVar{static_cast<int>(i + 1), Grade::integer(c)});
    poly = GradedPolynomial::from_word(word);

    auto make_model = [&](std::int64_t k) {
        GradingSpec spec({-b, c, a}, {UpperIndex::infinity(), UpperIndex::finite(k),
                                      UpperIndex::infinity()});
        return FiniteModel(spec, {4, k, 4});
    };
    FiniteModel m1 = make_model(k1), m2 = make_model(k2);
    Scope scope = Scope::for_degree(static_cast<int>(k1) + 1);

    ChainWitness w{poly, a, b, m1.spec(), m2.spec(), is_graded_identity(poly, m1, scope),
                   is_graded_identity(poly, m2, scope)};
    if (!w.at_k1.holds() || w.at_k2.holds())
        throw error("chain witness failed verification");
    return w;
}

}  // namespace zgrass
