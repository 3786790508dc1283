#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations in one-line notation, the classical symmetries,
 * classical pattern containment and avoidance classes S_n(tau, rho).
 *
 * Positions and values are 1-based at every interface. A Permutation of
 * length n always holds a rearrangement of {1,...,n}; the empty permutation
 * (n = 0) is valid and belongs to every avoidance class.
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "patstat/error.hpp"

namespace patstat {

class Permutation {
public:
    Permutation() = default;

    /// Validates that `values` is a rearrangement of {1,...,n}.
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        const auto n = static_cast<int>(values_.size());
        std::vector<bool> seen(values_.size() + 1, false);
        for (int v : values_) {
            if (v < 1 || v > n) {
                throw invalid_input("value " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n));
            }
            if (seen[v]) throw invalid_input("duplicate value " + std::to_string(v));
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        return Permutation(std::move(v), trusted{});
    }

    static Permutation decreasing(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = n - i;
        return Permutation(std::move(v), trusted{});
    }

    /// Space-separated one-line notation, e.g. "3 4 1 5 2". Blank input is
    /// the empty permutation.
    static Permutation parse(std::string_view text) {
        std::vector<int> v;
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) v.push_back(parse_int(tok));
        return Permutation(std::move(v));
    }

    /// Compact digit notation as used for patterns ("231"); values above 9
    /// are written in parentheses, e.g. "21(10)".
    static Permutation parse_compact(std::string_view text) {
        std::vector<int> v;
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c >= '0' && c <= '9') {
                v.push_back(c - '0');
            } else if (c == '(') {
                const auto close = text.find(')', i);
                if (close == std::string_view::npos) throw invalid_input("unbalanced '(' in pattern");
                v.push_back(parse_int(text.substr(i + 1, close - i - 1)));
                i = close;
            } else {
                throw invalid_input(std::string("unexpected character '") + c + "' in pattern");
            }
        }
        return Permutation(std::move(v));
    }

    int size() const noexcept { return static_cast<int>(values_.size()); }
    bool empty() const noexcept { return values_.empty(); }
    std::span<const int> values() const noexcept { return values_; }

    /// 1-based access: at(1) is the first entry.
    int at(int position) const { return values_.at(static_cast<std::size_t>(position - 1)); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    /// Lexicographic on one-line notation; shorter permutations first.
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.values_ <=> b.values_;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(values_[i]);
        }
        return out;
    }

    std::string to_compact() const {
        std::string out;
        for (int v : values_) out += v < 10 ? std::to_string(v) : "(" + std::to_string(v) + ")";
        return out;
    }

private:
    struct trusted {};
    Permutation(std::vector<int> values, trusted) : values_(std::move(values)) {}

    static int parse_int(std::string_view tok) {
        if (tok.empty()) throw invalid_input("empty entry");
        int value = 0;
        std::size_t i = 0;
        bool negative = false;
        if (tok[0] == '-' || tok[0] == '+') {
            negative = tok[0] == '-';
            i = 1;
        }
        if (i == tok.size()) throw invalid_input("bad entry '" + std::string(tok) + "'");
        for (; i < tok.size(); ++i) {
            if (tok[i] < '0' || tok[i] > '9') throw invalid_input("bad entry '" + std::string(tok) + "'");
            value = value * 10 + (tok[i] - '0');
            if (value > 1'000'000) throw invalid_input("entry too large '" + std::string(tok) + "'");
        }
        return negative ? -value : value;
    }

    friend Permutation from_trusted(std::vector<int> values);

    std::vector<int> values_;
};

/// Internal constructor for values already known to be a permutation.
inline Permutation from_trusted(std::vector<int> values) {
    return Permutation(std::move(values), Permutation::trusted{});
}

using Pattern = Permutation;

inline Permutation reverse(const Permutation& pi) {
    std::vector<int> v(pi.values().rbegin(), pi.values().rend());
    return from_trusted(std::move(v));
}

inline Permutation complement(const Permutation& pi) {
    const int n = pi.size();
    std::vector<int> v;
    v.reserve(n);
    for (int a : pi.values()) v.push_back(n + 1 - a);
    return from_trusted(std::move(v));
}

inline Permutation inverse(const Permutation& pi) {
    std::vector<int> v(pi.values().size());
    for (int i = 0; i < pi.size(); ++i) v[pi.values()[i] - 1] = i + 1;
    return from_trusted(std::move(v));
}

/// alpha + beta: beta's values shifted above alpha's.
inline Permutation direct_sum(const Permutation& alpha, const Permutation& beta) {
    std::vector<int> v(alpha.values().begin(), alpha.values().end());
    for (int b : beta.values()) v.push_back(alpha.size() + b);
    return from_trusted(std::move(v));
}

/// alpha - beta: alpha's values shifted above beta's.
inline Permutation skew_sum(const Permutation& alpha, const Permutation& beta) {
    std::vector<int> v;
    v.reserve(alpha.values().size() + beta.values().size());
    for (int a : alpha.values()) v.push_back(a + beta.size());
    v.insert(v.end(), beta.values().begin(), beta.values().end());
    return from_trusted(std::move(v));
}

/// First occurrence of `pattern` in `pi` in lexicographic order of index
/// tuples, as 1-based positions; nullopt when pi avoids the pattern.
inline std::optional<std::vector<int>> find_occurrence(const Permutation& pi, const Pattern& pattern) {
    const int n = pi.size();
    const int k = pattern.size();
    if (k > n) return std::nullopt;
    if (k == 0) return std::vector<int>{};
    const auto text = pi.values();
    const auto pat = pattern.values();
    std::vector<int> chosen;
    chosen.reserve(k);

    // chosen[j] is a 0-based index into pi; each extension must agree with
    // the pattern's relative order against every earlier chosen entry.
    std::function<bool(int)> extend = [&](int start) -> bool {
        const auto j = chosen.size();
        if (static_cast<int>(j) == k) return true;
        for (int i = start; i <= n - (k - static_cast<int>(j)); ++i) {
            bool ok = true;
            for (std::size_t m = 0; m < j && ok; ++m) {
                ok = (text[chosen[m]] < text[i]) == (pat[m] < pat[j]);
            }
            if (!ok) continue;
            chosen.push_back(i);
            if (extend(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    for (int& c : chosen) ++c;
    return chosen;
}

inline bool contains(const Permutation& pi, const Pattern& pattern) {
    return find_occurrence(pi, pattern).has_value();
}

/// Unordered pair of distinct patterns. Stored in ascending lexicographic
/// order so that {231,312} and {312,231} compare and hash equal.
class PatternPair {
public:
    PatternPair(Pattern a, Pattern b) {
        if (a == b) throw invalid_input("pattern pair needs two distinct patterns");
        if (b < a) std::swap(a, b);
        first_ = std::move(a);
        second_ = std::move(b);
    }

    /// "231,312" (either order).
    static PatternPair parse(std::string_view text) {
        const auto comma = text.find(',');
        if (comma == std::string_view::npos) throw invalid_input("pattern pair must look like 231,312");
        auto a = Pattern::parse_compact(trim(text.substr(0, comma)));
        auto b = Pattern::parse_compact(trim(text.substr(comma + 1)));
        if (a.size() != 3 || b.size() != 3) throw invalid_input("pattern pair entries must have length 3");
        return PatternPair(std::move(a), std::move(b));
    }

    const Pattern& first() const noexcept { return first_; }
    const Pattern& second() const noexcept { return second_; }

    std::string to_string() const { return first_.to_compact() + "," + second_.to_compact(); }

    friend bool operator==(const PatternPair&, const PatternPair&) = default;
    friend auto operator<=>(const PatternPair&, const PatternPair&) = default;

private:
    static std::string_view trim(std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    }

    Pattern first_;
    Pattern second_;
};

inline bool avoids_pair(const Permutation& pi, const PatternPair& pair) {
    return !contains(pi, pair.first()) && !contains(pi, pair.second());
}

/// All 15 unordered pairs of distinct length-3 patterns, sorted.
inline std::vector<PatternPair> all_pattern_pairs() {
    std::vector<Pattern> s3;
    std::vector<int> v{1, 2, 3};
    do s3.push_back(Permutation(v));
    while (std::next_permutation(v.begin(), v.end()));
    std::vector<PatternPair> out;
    for (std::size_t i = 0; i < s3.size(); ++i)
        for (std::size_t j = i + 1; j < s3.size(); ++j) out.emplace_back(s3[i], s3[j]);
    std::sort(out.begin(), out.end());
    return out;
}

/// S_n(tau, rho) in lexicographic order.
///
/// Grown one length at a time: deleting the entry n from an avoider leaves
/// an avoider, so every member of S_n arises exactly once by inserting n
/// into a member of S_{n-1}.
inline std::vector<Permutation> enumerate_class(const PatternPair& pair, int n) {
    std::vector<Permutation> level{Permutation{}};
    for (int m = 1; m <= n; ++m) {
        std::vector<Permutation> next;
        for (const auto& parent : level) {
            const auto base = parent.values();
            for (int pos = 0; pos <= parent.size(); ++pos) {
                std::vector<int> v(base.begin(), base.begin() + pos);
                v.push_back(m);
                v.insert(v.end(), base.begin() + pos, base.end());
                auto child = from_trusted(std::move(v));
                if (avoids_pair(child, pair)) next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    return level;
}

}  // namespace patstat
