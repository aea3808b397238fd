#include "zgrass/grading.hpp"

#include <algorithm>
#include <numeric>

namespace zgrass {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

UpperIndex UpperIndex::finite(std::int64_t n) {
    if (n < 0) throw error("upper index must be non-negative");
    return UpperIndex(false, n);
}

std::int64_t UpperIndex::value() const {
    if (infinite_) throw error("upper index is infinite");
    return value_;
}

GradingSpec::GradingSpec(std::vector<std::int64_t> lower, std::vector<UpperIndex> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) throw error("grading spec needs at least one block");
    if (lower_.size() != upper_.size())
        throw error("lower/upper index lists differ in length");
    for (std::size_t j = 1; j < lower_.size(); ++j) {
        if (lower_[j - 1] >= lower_[j])
            throw error("lower indices must be strictly increasing");
    }
}

std::int64_t GradingSpec::degree_gcd() const {
    std::int64_t g = 0;
    for (std::int64_t r : lower_) g = std::gcd(g, r < 0 ? -r : r);
    return g;
}

FiniteModel::FiniteModel(GradingSpec spec, std::vector<std::int64_t> counts)
    : spec_(std::move(spec)), counts_(std::move(counts)) {
    if (counts_.size() != static_cast<std::size_t>(spec_.block_count()))
        throw error("counts list does not match the number of blocks");
    std::int64_t total = 0;
    for (std::size_t j = 0; j < counts_.size(); ++j) {
        if (counts_[j] < 0) throw error("negative generator count");
        const UpperIndex& v = spec_.upper()[j];
        if (!v.is_infinite() && counts_[j] > v.value())
            throw error("count " + std::to_string(counts_[j]) + " exceeds upper index " +
                        std::to_string(v.value()) + " in block " + std::to_string(j + 1));
        total += counts_[j];
    }
    if (total > Monomial::max_rank)
        throw error("total rank " + std::to_string(total) + " exceeds the supported maximum");
    rank_ = static_cast<int>(total);
    gen_degree_.reserve(static_cast<std::size_t>(rank_));
    for (std::size_t j = 0; j < counts_.size(); ++j)
        for (std::int64_t t = 0; t < counts_[j]; ++t)
            gen_degree_.push_back(spec_.lower()[j]);
}

int FiniteModel::block_of(int generator) const {
    if (generator < 1 || generator > rank_)
        throw error("generator index " + std::to_string(generator) + " out of range");
    std::int64_t upto = 0;
    for (std::size_t j = 0; j < counts_.size(); ++j) {
        upto += counts_[j];
        if (generator <= upto) return static_cast<int>(j);
    }
    throw error("unreachable");
}

std::int64_t FiniteModel::generator_degree(int generator) const {
    if (generator < 1 || generator > rank_)
        throw error("generator index " + std::to_string(generator) + " out of range");
    return gen_degree_[static_cast<std::size_t>(generator - 1)];
}

std::int64_t FiniteModel::degree(Monomial w) const {
    if (w.max_index() > rank_)
        throw error("monomial uses generator beyond rank " + std::to_string(rank_));
    std::int64_t z = 0;
    std::uint64_t b = w.bits();
    while (b) {
        std::uint64_t low = b & -b;
        z += gen_degree_[static_cast<std::size_t>(std::countr_zero(low))];
        b ^= low;
    }
    return z;
}

std::int64_t FiniteModel::quotient_degree(Monomial w, std::int64_t d) const {
    if (d < 1) throw error("modulus must be at least 1");
    return canonical_residue(degree(w), d);
}

namespace {

// Emits all length-l subsets of {1..rank} in lexicographic index order, which
// coincides with the canonical monomial order within one length.
template <typename F>
void for_each_combination(int rank, int l, F&& visit) {
    if (l == 0) {
        visit(Monomial::unit());
        return;
    }
    if (l > rank) return;
    std::vector<int> idx(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        visit(Monomial::from_indices(idx));
        int j = l - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == rank - (l - 1 - j)) --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < l; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
}

}  // namespace

std::vector<Monomial> FiniteModel::component_basis(std::int64_t z, int max_length) const {
    std::vector<Monomial> out;
    int cap = std::min(max_length, rank_);
    for (int l = 0; l <= cap; ++l) {
        for_each_combination(rank_, l, [&](Monomial w) {
            if (degree(w) == z) out.push_back(w);
        });
    }
    return out;
}

std::vector<Monomial> FiniteModel::component_basis_mod(std::int64_t r, std::int64_t d,
                                                       int max_length) const {
    if (d < 1) throw error("modulus must be at least 1");
    std::int64_t target = canonical_residue(r, d);
    std::vector<Monomial> out;
    int cap = std::min(max_length, rank_);
    for (int l = 0; l <= cap; ++l) {
        for_each_combination(rank_, l, [&](Monomial w) {
            if (canonical_residue(degree(w), d) == target) out.push_back(w);
        });
    }
    return out;
}

Homogeneity FiniteModel::homogeneity(const Element& a) const {
    if (a.rank() != rank_) throw error("element rank does not match the model");
    if (a.is_zero()) return Homogeneity{Homogeneity::Kind::all_degrees, 0};
    bool have = false;
    std::int64_t z = 0;
    for (const auto& [w, c] : a.terms()) {
        std::int64_t dw = degree(w);
        if (!have) {
            z = dw;
            have = true;
        } else if (dw != z) {
            return Homogeneity{Homogeneity::Kind::not_homogeneous, 0};
        }
    }
    return Homogeneity{Homogeneity::Kind::degree, z};
}

}  // namespace zgrass
