#ifndef ZGRASS_SRC_ENUMERATION_HPP
#define ZGRASS_SRC_ENUMERATION_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "zgrass/grading.hpp"

namespace zgrass::detail {

/// Box of coefficient vectors 0 <= alpha_j <= caps[j] dotted with fixed
/// degrees, with reachable-range pruning on the tail.
struct SearchSpace {
    std::vector<std::int64_t> degrees;
    std::vector<std::int64_t> caps;
    std::vector<std::int64_t> suffix_lo;
    std::vector<std::int64_t> suffix_hi;

    SearchSpace(const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& cap)
        : degrees(r), caps(cap) {
        std::size_t n = r.size();
        suffix_lo.assign(n + 1, 0);
        suffix_hi.assign(n + 1, 0);
        for (std::size_t j = n; j-- > 0;) {
            std::int64_t span = caps[j] * degrees[j];
            suffix_lo[j] = suffix_lo[j + 1] + std::min<std::int64_t>(0, span);
            suffix_hi[j] = suffix_hi[j + 1] + std::max<std::int64_t>(0, span);
        }
    }

    /// First solution of sum = target in lexicographic coefficient order.
    bool first(std::int64_t target, std::vector<std::int64_t>& out) const {
        out.assign(degrees.size(), 0);
        return dfs(0, 0, target, out);
    }

    /// Visits every solution of sum = target in lexicographic order.
    template <typename F>
    void each(std::int64_t target, F&& visit) const {
        std::vector<std::int64_t> coeffs(degrees.size(), 0);
        walk(0, 0, target, coeffs, visit);
    }

    /// Visits every reachable sum inside [-window, window] (with repeats).
    template <typename F>
    void each_sum_within(std::int64_t window, F&& visit) const {
        std::vector<std::int64_t> coeffs(degrees.size(), 0);
        walk_sums(0, 0, window, coeffs, visit);
    }

private:
    bool dfs(std::size_t j, std::int64_t sum, std::int64_t target,
             std::vector<std::int64_t>& out) const {
        if (sum + suffix_lo[j] > target || sum + suffix_hi[j] < target) return false;
        if (j == degrees.size()) return sum == target;
        for (std::int64_t alpha = 0; alpha <= caps[j]; ++alpha) {
            out[j] = alpha;
            if (dfs(j + 1, sum + alpha * degrees[j], target, out)) return true;
        }
        out[j] = 0;
        return false;
    }

    template <typename F>
    void walk(std::size_t j, std::int64_t sum, std::int64_t target,
              std::vector<std::int64_t>& coeffs, F&& visit) const {
        if (sum + suffix_lo[j] > target || sum + suffix_hi[j] < target) return;
        if (j == degrees.size()) {
            if (sum == target) visit(coeffs);
            return;
        }
        for (std::int64_t alpha = 0; alpha <= caps[j]; ++alpha) {
            coeffs[j] = alpha;
            walk(j + 1, sum + alpha * degrees[j], target, coeffs, visit);
        }
        coeffs[j] = 0;
    }

    template <typename F>
    void walk_sums(std::size_t j, std::int64_t sum, std::int64_t window,
                   std::vector<std::int64_t>& coeffs, F&& visit) const {
        if (sum + suffix_lo[j] > window || sum + suffix_hi[j] < -window) return;
        if (j == degrees.size()) {
            if (sum >= -window && sum <= window) visit(sum, coeffs);
            return;
        }
        for (std::int64_t alpha = 0; alpha <= caps[j]; ++alpha) {
            coeffs[j] = alpha;
            walk_sums(j + 1, sum + alpha * degrees[j], window, coeffs, visit);
        }
        coeffs[j] = 0;
    }
};

inline std::vector<std::int64_t> coefficient_caps(const GradingSpec& spec,
                                                  std::int64_t bound) {
    std::vector<std::int64_t> caps;
    caps.reserve(spec.upper().size());
    for (const UpperIndex& v : spec.upper())
        caps.push_back(v.is_infinite() ? bound : std::min(bound, v.value()));
    return caps;
}

}  // namespace zgrass::detail

#endif
