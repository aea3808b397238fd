#include <functional>
#include <vector>

#include "zgrass/freealg.hpp"

namespace zgrass {

namespace {

GradedPolynomial var(int id, std::int64_t g) {
    return GradedPolynomial::variable(id, Grade::integer(g));
}

// Pairs (g, h), g <= h, both in [-w, w], one instance per pair: a commutator
// when the picker selects type 0 for either grade, else an anticommutator.
void emit_pair_rules(std::vector<GradedPolynomial>& out, std::int64_t w,
                     const std::function<int(std::int64_t)>& type_of) {
    for (std::int64_t g = -w; g <= w; ++g) {
        for (std::int64_t h = g; h <= w; ++h) {
            if (type_of(g) == 0 || type_of(h) == 0)
                out.push_back(commutator(var(1, g), var(2, h)));
            else
                out.push_back(anticommutator(var(1, g), var(2, h)));
        }
    }
}

// Products u_1...u_alpha of variables with grades off the lattice <d>, whose
// residue indices sum beyond k. Grade tuples are non-decreasing.
void emit_products(std::vector<GradedPolynomial>& out, const IdentityFamily& f,
                   int degree_bound, std::int64_t w) {
    std::vector<std::int64_t> grades;
    for (std::int64_t g = -w; g <= w; ++g)
        if (residue_index(g, f.c, f.d) != 0) grades.push_back(g);

    std::vector<std::int64_t> tuple;
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t from,
                                                             std::int64_t residue_sum) {
        if (tuple.size() >= 2 && residue_sum > f.k) {
            Word word;
            for (std::size_t i = 0; i < tuple.size(); ++i)
                word.push_back(GVar{static_cast<int>(i + 1), Grade::integer(tuple[i])});
            out.push_back(GradedPolynomial::from_word(std::move(word)));
        }
        if (tuple.size() == static_cast<std::size_t>(degree_bound)) return;
        for (std::size_t i = from; i < grades.size(); ++i) {
            tuple.push_back(grades[i]);
            rec(i, residue_sum + residue_index(grades[i], f.c, f.d));
            tuple.pop_back();
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<GradedPolynomial> gen_identities(const IdentityFamily& family,
                                             int degree_bound,
                                             std::int64_t grade_window) {
    if (degree_bound < 0) throw error("degree bound must be non-negative");
    if (grade_window < 0) throw error("grade window must be non-negative");
    const std::int64_t w = grade_window;
    std::vector<GradedPolynomial> out;

    switch (family.kind) {
        case IdentityFamily::Kind::canonical: {
            if (degree_bound < 2) break;
            emit_pair_rules(out, w, [](std::int64_t g) { return g % 2 == 0 ? 0 : 1; });
            break;
        }
        case IdentityFamily::Kind::v1: {
            if (degree_bound >= 3) {
                for (std::int64_t g1 = -w; g1 <= w; ++g1)
                    for (std::int64_t g2 = g1; g2 <= w; ++g2)
                        for (std::int64_t g3 = g2; g3 <= w; ++g3) {
                            std::vector<GradedPolynomial> xs{var(1, g1), var(2, g2),
                                                             var(3, g3)};
                            out.push_back(
                                commutator(std::span<const GradedPolynomial>(xs)));
                        }
            }
            emit_products(out, family, degree_bound, w);
            break;
        }
        case IdentityFamily::Kind::v2: {
            if (degree_bound >= 2)
                emit_pair_rules(out, w, [&](std::int64_t g) {
                    return parity_type(g, family.c, family.d);
                });
            emit_products(out, family, degree_bound, w);
            break;
        }
        case IdentityFamily::Kind::scaled: {
            if (!family.base) throw error("scaled family needs a base family");
            std::vector<GradedPolynomial> inner =
                gen_identities(*family.base, degree_bound, w / family.d);
            for (const GradedPolynomial& f : inner)
                out.push_back(psi_d(phi_d(f, family.d), family.d));
            if (degree_bound >= 1) {
                for (std::int64_t g = -w; g <= w; ++g)
                    if (g % family.d != 0) out.push_back(var(1, g));
            }
            break;
        }
    }
    return out;
}

}  // namespace zgrass
