#pragma once

// The eight permutation statistics. All are total, and all vanish on the
// empty permutation.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "patstat/permutation.hpp"

namespace patstat {

enum class Stat { asc, des, lrmax, lrmin, rlmax, rlmin, mna, mnd };

inline constexpr std::array<Stat, 8> kAllStats{Stat::asc,   Stat::des,   Stat::lrmax, Stat::lrmin,
                                               Stat::rlmax, Stat::rlmin, Stat::mna,   Stat::mnd};

inline constexpr std::string_view stat_name(Stat s) {
    constexpr std::array<std::string_view, 8> names{"asc",   "des",   "lrmax", "lrmin",
                                                    "rlmax", "rlmin", "mna",   "mnd"};
    return names[static_cast<int>(s)];
}

inline std::optional<Stat> parse_stat(std::string_view name) {
    for (Stat s : kAllStats)
        if (stat_name(s) == name) return s;
    return std::nullopt;
}

inline int asc(const Permutation& pi) {
    const auto v = pi.values();
    int count = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) count += v[i] < v[i + 1];
    return count;
}

inline int des(const Permutation& pi) {
    const auto v = pi.values();
    int count = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) count += v[i] > v[i + 1];
    return count;
}

inline int lrmax(const Permutation& pi) {
    int count = 0, best = 0;
    for (int a : pi.values())
        if (a > best) best = a, ++count;
    return count;
}

inline int lrmin(const Permutation& pi) {
    int count = 0, best = pi.size() + 1;
    for (int a : pi.values())
        if (a < best) best = a, ++count;
    return count;
}

inline int rlmax(const Permutation& pi) {
    const auto v = pi.values();
    int count = 0, best = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it)
        if (*it > best) best = *it, ++count;
    return count;
}

inline int rlmin(const Permutation& pi) {
    const auto v = pi.values();
    int count = 0, best = pi.size() + 1;
    for (auto it = v.rbegin(); it != v.rend(); ++it)
        if (*it < best) best = *it, ++count;
    return count;
}

namespace detail {

// Greedy interval scheduling on adjacent pairs: take the leftmost
// qualifying pair, then resume two positions later.
template <class Rel>
int max_disjoint_adjacent(const Permutation& pi, Rel rel) {
    const auto v = pi.values();
    int count = 0;
    std::size_t i = 0;
    while (i + 1 < v.size()) {
        if (rel(v[i], v[i + 1])) {
            ++count;
            i += 2;
        } else {
            ++i;
        }
    }
    return count;
}

}  // namespace detail

/// Maximum number of index-disjoint ascents.
inline int mna(const Permutation& pi) {
    return detail::max_disjoint_adjacent(pi, [](int a, int b) { return a < b; });
}

/// Maximum number of index-disjoint descents.
inline int mnd(const Permutation& pi) {
    return detail::max_disjoint_adjacent(pi, [](int a, int b) { return a > b; });
}

struct StatVector {
    int asc = 0;
    int des = 0;
    int lrmax = 0;
    int lrmin = 0;
    int rlmax = 0;
    int rlmin = 0;
    int mna = 0;
    int mnd = 0;

    int get(Stat s) const {
        switch (s) {
            case Stat::asc: return asc;
            case Stat::des: return des;
            case Stat::lrmax: return lrmax;
            case Stat::lrmin: return lrmin;
            case Stat::rlmax: return rlmax;
            case Stat::rlmin: return rlmin;
            case Stat::mna: return mna;
            case Stat::mnd: return mnd;
        }
        return 0;
    }

    friend bool operator==(const StatVector&, const StatVector&) = default;
};

inline StatVector stat_vector(const Permutation& pi) {
    return StatVector{asc(pi),   des(pi),   lrmax(pi), lrmin(pi),
                      rlmax(pi), rlmin(pi), mna(pi),   mnd(pi)};
}

inline int stat_value(const Permutation& pi, Stat s) { return stat_vector(pi).get(s); }

inline void to_json(nlohmann::json& j, const StatVector& sv) {
    j = nlohmann::json{{"asc", sv.asc},     {"des", sv.des},     {"lrmax", sv.lrmax},
                       {"lrmin", sv.lrmin}, {"rlmax", sv.rlmax}, {"rlmin", sv.rlmin},
                       {"mna", sv.mna},     {"mnd", sv.mnd}};
}

inline void from_json(const nlohmann::json& j, StatVector& sv) {
    for (Stat s : kAllStats) {
        const int value = j.at(std::string(stat_name(s))).get<int>();
        switch (s) {
            case Stat::asc: sv.asc = value; break;
            case Stat::des: sv.des = value; break;
            case Stat::lrmax: sv.lrmax = value; break;
            case Stat::lrmin: sv.lrmin = value; break;
            case Stat::rlmax: sv.rlmax = value; break;
            case Stat::rlmin: sv.rlmin = value; break;
            case Stat::mna: sv.mna = value; break;
            case Stat::mnd: sv.mnd = value; break;
        }
    }
}

}  // namespace patstat
