#pragma once

/**
 * @file bijections.hpp
 * @brief Composition codecs for layered permutations, S_n(231,312), and
 * for S_n(213,231), and the maps f and g built on them.
 *
 * A layered permutation is a direct sum of decreasing blocks; its block
 * sizes form a composition of n, equivalently a "line set" in {1,...,n-1}
 * (a line after value k when k and k+1 sit in different blocks).
 *
 *   f : S_n(231,312) -> S_n(231,312)   complement the line set
 *   g : S_n(231,312) -> S_n(213,231)   reverse the block sizes and read
 *                                      them as ascending runs
 *
 * f and g both exchange (asc, des, mna, mnd) with (des, asc, mnd, mna).
 */

#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "patstat/error.hpp"
#include "patstat/permutation.hpp"

namespace patstat {

class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int part : parts_)
            if (part < 1) throw invalid_input("composition parts must be positive");
    }

    /// The composition of n whose partial sums are exactly `lines`.
    static Composition from_line_set(int n, const std::set<int>& lines) {
        std::vector<int> parts;
        int previous = 0;
        for (int line : lines) {
            if (line < 1 || line >= n) throw invalid_input("line position outside 1..n-1");
            parts.push_back(line - previous);
            previous = line;
        }
        if (n > 0) parts.push_back(n - previous);
        return Composition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Proper partial sums, a subset of {1,...,n-1}.
    std::set<int> line_set() const {
        std::set<int> lines;
        int sum = 0;
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i) lines.insert(sum += parts_[i]);
        return lines;
    }

    Composition reversed() const { return Composition(std::vector<int>(parts_.rbegin(), parts_.rend())); }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

namespace detail {

inline void require_avoids(const Permutation& pi, const PatternPair& pair, std::string_view what) {
    for (const auto* pattern : {&pair.first(), &pair.second()}) {
        if (auto occ = find_occurrence(pi, *pattern)) {
            std::string where;
            for (int pos : *occ) where += (where.empty() ? "" : ",") + std::to_string(pos);
            throw not_in_class(std::string(what) + ": permutation contains " + pattern->to_compact() +
                                   " at positions " + where,
                               pattern->to_compact(), *occ);
        }
    }
}

inline const PatternPair& layered_pair() {
    static const PatternPair pair = PatternPair::parse("231,312");
    return pair;
}

inline const PatternPair& runs_pair() {
    static const PatternPair pair = PatternPair::parse("213,231");
    return pair;
}

inline void require_nonempty(const Permutation& pi, std::string_view what) {
    if (pi.empty()) throw invalid_input(std::string(what) + " is undefined on the empty permutation");
}

}  // namespace detail

/// Block sizes of a layered permutation, left to right.
inline Composition layered_decompose(const Permutation& pi) {
    detail::require_avoids(pi, detail::layered_pair(), "layered_decompose");
    std::vector<int> parts;
    const auto v = pi.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == 0 || v[i] > v[i - 1]) parts.push_back(0);
        ++parts.back();
    }
    return Composition(std::move(parts));
}

/// Block j holds the next parts[j] smallest values in decreasing order.
inline Permutation layered_compose(const Composition& c) {
    std::vector<int> v;
    int base = 0;
    for (int part : c.parts()) {
        for (int k = part; k >= 1; --k) v.push_back(base + k);
        base += part;
    }
    return from_trusted(std::move(v));
}

inline Permutation map_f(const Permutation& pi) {
    detail::require_nonempty(pi, "f");
    const auto lines = layered_decompose(pi).line_set();
    std::set<int> complement_lines;
    for (int k = 1; k < pi.size(); ++k)
        if (!lines.contains(k)) complement_lines.insert(k);
    return layered_compose(Composition::from_line_set(pi.size(), complement_lines));
}

/// Lengths of the maximal ascending runs of a {213,231}-avoider.
inline Composition runs_decompose_213_231(const Permutation& sigma) {
    detail::require_avoids(sigma, detail::runs_pair(), "runs_decompose_213_231");
    std::vector<int> parts;
    const auto v = sigma.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == 0 || v[i] < v[i - 1]) parts.push_back(0);
        ++parts.back();
    }
    return Composition(std::move(parts));
}

/// For each part r: the r-1 smallest unused values ascending, then the
/// largest unused value.
inline Permutation runs_compose_213_231(const Composition& c) {
    std::vector<int> v;
    int low = 1;
    int high = c.n();
    for (int part : c.parts()) {
        for (int k = 1; k < part; ++k) v.push_back(low++);
        v.push_back(high--);
    }
    return from_trusted(std::move(v));
}

inline Permutation map_g(const Permutation& pi) {
    detail::require_nonempty(pi, "g");
    return runs_compose_213_231(layered_decompose(pi).reversed());
}

}  // namespace patstat
