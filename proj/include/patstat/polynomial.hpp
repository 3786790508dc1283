#pragma once

/**
 * @file polynomial.hpp
 * @brief Exact sparse multivariate polynomials over the nine variables
 * x, p, q, u, v, s, t, y, z, and truncated power-series expansion of
 * rational functions in the size variable x.
 *
 * Coefficients are arbitrary-precision integers. Exponent vectors are fixed
 * width over the closed variable set. A MultiPoly never stores a zero
 * coefficient, so structural equality is polynomial equality.
 *
 * Expansion of num/den uses the convolution recurrence
 *
 *     c_k = num_k - sum_{j=1..k} den_j * c_{k-j}
 *
 * where the subscripts are x-degree slices (polynomials in the marker
 * variables). The x^0 slice of den must be exactly 1.
 */

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "patstat/error.hpp"

namespace patstat {

using Integer = boost::multiprecision::cpp_int;

enum class Var : std::uint8_t { x, p, q, u, v, s, t, y, z };

inline constexpr std::size_t kVarCount = 9;
inline constexpr std::array<Var, kVarCount> kAllVars{Var::x, Var::p, Var::q, Var::u, Var::v,
                                                     Var::s, Var::t, Var::y, Var::z};

inline constexpr char var_name(Var v) { return "xpquvstyz"[static_cast<int>(v)]; }

inline std::optional<Var> parse_var(char c) {
    for (Var v : kAllVars)
        if (var_name(v) == c) return v;
    return std::nullopt;
}

using Exponents = std::array<std::uint16_t, kVarCount>;

inline std::uint16_t& exp_of(Exponents& e, Var v) { return e[static_cast<std::size_t>(v)]; }
inline std::uint16_t exp_of(const Exponents& e, Var v) { return e[static_cast<std::size_t>(v)]; }

/// A renaming of variables: var `v` is replaced by `map[v]`.
using VarMap = std::array<Var, kVarCount>;

inline constexpr VarMap identity_var_map() { return kAllVars; }

class MultiPoly {
public:
    using Terms = std::map<Exponents, Integer>;

    MultiPoly() = default;
    MultiPoly(long long constant) { add_term(Exponents{}, Integer(constant)); }  // NOLINT
    MultiPoly(const Integer& constant) { add_term(Exponents{}, constant); }      // NOLINT

    static MultiPoly variable(Var v, unsigned power = 1) {
        Exponents e{};
        exp_of(e, v) = static_cast<std::uint16_t>(power);
        MultiPoly out;
        out.add_term(e, 1);
        return out;
    }

    static MultiPoly monomial(const Exponents& e, const Integer& coeff) {
        MultiPoly out;
        out.add_term(e, coeff);
        return out;
    }

    /// Adds coeff * x^e, merging with an existing term and dropping zeros.
    void add_term(const Exponents& e, const Integer& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Integer coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    Integer constant_term() const { return coefficient(Exponents{}); }

    int degree(Var v) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max<int>(d, exp_of(e, v));
        return d;
    }

    bool uses(Var v) const { return degree(v) > 0; }

    std::set<Var> variables() const {
        std::set<Var> out;
        for (const auto& [e, c] : terms_)
            for (Var v : kAllVars)
                if (exp_of(e, v) > 0) out.insert(v);
        return out;
    }

    MultiPoly operator-() const {
        MultiPoly out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    MultiPoly& operator+=(const MultiPoly& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }

    MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (std::size_t i = 0; i < kVarCount; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    MultiPoly pow(unsigned k) const {
        MultiPoly out(1);
        for (unsigned i = 0; i < k; ++i) out *= *this;
        return out;
    }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// v := 1.
    MultiPoly substitute_one(Var v) const {
        MultiPoly out;
        for (const auto& [key, c] : terms_) {
            Exponents e = key;
            exp_of(e, v) = 0;
            out.add_term(e, c);
        }
        return out;
    }

    /// Simultaneous renaming: every occurrence of v becomes map[v].
    MultiPoly rename(const VarMap& map) const {
        MultiPoly out;
        for (const auto& [e, c] : terms_) {
            Exponents r{};
            for (Var v : kAllVars) exp_of(r, map[static_cast<std::size_t>(v)]) += exp_of(e, v);
            out.add_term(r, c);
        }
        return out;
    }

    /// Coefficient of x^k as a polynomial in the remaining variables.
    MultiPoly x_slice(int k) const {
        MultiPoly out;
        for (const auto& [key, c] : terms_) {
            Exponents e = key;
            if (exp_of(e, Var::x) != k) continue;
            exp_of(e, Var::x) = 0;
            out.add_term(e, c);
        }
        return out;
    }

    /// All x-slices, index = x-degree; empty for the zero polynomial.
    std::vector<MultiPoly> x_slices() const {
        std::vector<MultiPoly> out(static_cast<std::size_t>(degree(Var::x) + 1));
        for (const auto& [key, c] : terms_) {
            Exponents e = key;
            const auto k = exp_of(e, Var::x);
            exp_of(e, Var::x) = 0;
            out[k].add_term(e, c);
        }
        return out;
    }

    /// Drops every term of x-degree above n.
    MultiPoly truncate_x(int n) const {
        MultiPoly out;
        for (const auto& [e, c] : terms_)
            if (exp_of(e, Var::x) <= n) out.add_term(e, c);
        return out;
    }

    Integer evaluate(const std::array<Integer, kVarCount>& point) const {
        Integer total = 0;
        for (const auto& [e, c] : terms_) {
            Integer term = c;
            for (std::size_t i = 0; i < kVarCount; ++i)
                for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
            total += term;
        }
        return total;
    }

    /// Value with every variable set to 1.
    Integer sum_of_coefficients() const {
        Integer total = 0;
        for (const auto& [e, c] : terms_) total += c;
        return total;
    }

private:
    Terms terms_;
};

/// Shifts every term by x^k.
inline MultiPoly times_x_power(const MultiPoly& a, int k) { return a * MultiPoly::variable(Var::x, k); }

// ---------------------------------------------------------------------------
// Printing. Terms in descending lexicographic order of the exponents of
// (p, q, u, v, s, t, y, z, x); e.g. "p^2 y + 2 p q y z + q^2 z".

namespace detail {

inline constexpr std::array<Var, kVarCount> kPrintOrder{Var::p, Var::q, Var::u, Var::v, Var::s,
                                                        Var::t, Var::y, Var::z, Var::x};

inline std::array<std::uint16_t, kVarCount> print_key(const Exponents& e) {
    std::array<std::uint16_t, kVarCount> key{};
    for (std::size_t i = 0; i < kVarCount; ++i) key[i] = exp_of(e, kPrintOrder[i]);
    return key;
}

}  // namespace detail

inline std::vector<std::pair<Exponents, Integer>> terms_in_print_order(const MultiPoly& a) {
    std::vector<std::pair<Exponents, Integer>> out(a.terms().begin(), a.terms().end());
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        return detail::print_key(l.first) > detail::print_key(r.first);
    });
    return out;
}

/// "p^2 y", or "1" for the empty monomial.
inline std::string monomial_to_string(const Exponents& e) {
    std::string out;
    for (Var v : detail::kPrintOrder) {
        const auto k = exp_of(e, v);
        if (k == 0) continue;
        if (!out.empty()) out += ' ';
        out += var_name(v);
        if (k > 1) out += '^' + std::to_string(k);
    }
    return out.empty() ? "1" : out;
}

inline std::string to_string(const MultiPoly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_in_print_order(a)) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const bool constant = e == Exponents{};
        if (constant) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + ' ';
            out += monomial_to_string(e);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing of printed formulas: "1 + q^2 s^2 v x^2 - q s x (1 + v + p v x)".
// Juxtaposition multiplies, '*' is accepted, '^' takes a non-negative
// integer exponent, and every letter is a single variable.

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    MultiPoly parse() {
        MultiPoly result = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    MultiPoly expr() {
        MultiPoly total;
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        MultiPoly first = term();
        total += negate ? -first : first;
        for (;;) {
            skip_space();
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            MultiPoly next = term();
            total += c == '-' ? -next : next;
        }
        return total;
    }

    MultiPoly term() {
        MultiPoly product = power();
        for (;;) {
            skip_space();
            const char c = peek();
            if (c == '*') {
                ++pos_;
                product *= power();
            } else if (starts_primary(c)) {
                product *= power();
            } else {
                break;
            }
        }
        return product;
    }

    MultiPoly power() {
        MultiPoly base = primary();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer");
            base = base.pow(static_cast<unsigned>(std::stoul(digits())));
        }
        return base;
    }

    MultiPoly primary() {
        skip_space();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(Integer(digits()));
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            skip_space();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (auto v = parse_var(c)) {
            ++pos_;
            return MultiPoly::variable(*v);
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    static bool starts_primary(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || parse_var(c).has_value();
    }

    std::string digits() {
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw invalid_input("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// JSON: a MultiPoly is a list of {"exponents": {var: int}, "coeff": "decimal"}
// in print order; zero exponents are omitted.

inline nlohmann::json poly_to_json(const MultiPoly& a) {
    auto out = nlohmann::json::array();
    for (const auto& [e, c] : terms_in_print_order(a)) {
        auto exps = nlohmann::json::object();
        for (Var v : detail::kPrintOrder)
            if (exp_of(e, v) > 0) exps[std::string(1, var_name(v))] = exp_of(e, v);
        out.push_back({{"exponents", exps}, {"coeff", c.str()}});
    }
    return out;
}

inline MultiPoly poly_from_json(const nlohmann::json& j) {
    MultiPoly out;
    for (const auto& term : j) {
        Exponents e{};
        for (const auto& [name, value] : term.at("exponents").items()) {
            auto v = name.size() == 1 ? parse_var(name[0]) : std::nullopt;
            if (!v) throw invalid_input("unknown variable '" + name + "'");
            exp_of(e, *v) = value.get<std::uint16_t>();
        }
        out.add_term(e, Integer(term.at("coeff").get<std::string>()));
    }
    return out;
}

// ---------------------------------------------------------------------------

/// num/den with den(0,...,0) = 1.
class RationalGF {
public:
    RationalGF(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.constant_term() != 1) {
            throw bad_denominator("denominator constant term is " + den_.constant_term().str() +
                                  ", expected 1");
        }
    }

    const MultiPoly& num() const noexcept { return num_; }
    const MultiPoly& den() const noexcept { return den_; }

    std::set<Var> variables() const {
        auto vars = num_.variables();
        vars.merge(den_.variables());
        return vars;
    }

    RationalGF rename(const VarMap& map) const { return RationalGF(num_.rename(map), den_.rename(map)); }
    RationalGF substitute_one(Var v) const {
        return RationalGF(num_.substitute_one(v), den_.substitute_one(v));
    }

    friend bool operator==(const RationalGF&, const RationalGF&) = default;

private:
    MultiPoly num_;
    MultiPoly den_;
};

/// Sum of two rational functions with a cross-multiplied denominator.
inline RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    if (a.den() == b.den()) return RationalGF(a.num() + b.num(), a.den());
    return RationalGF(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

struct SeriesTable {
    int n_max = 0;
    /// coeffs[k] is the coefficient of x^k, free of x.
    std::vector<MultiPoly> coeffs;

    friend bool operator==(const SeriesTable&, const SeriesTable&) = default;
};

inline SeriesTable expand(const RationalGF& gf, int n_max) {
    if (n_max < 0) throw invalid_input("n_max must be non-negative");
    const auto den = gf.den().x_slices();
    const auto num = gf.num().x_slices();
    if (den.empty() || den[0] != MultiPoly(1)) {
        throw bad_denominator("x^0 part of the denominator is not 1; cannot expand");
    }
    SeriesTable table{n_max, {}};
    table.coeffs.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int k = 0; k <= n_max; ++k) {
        MultiPoly c = k < static_cast<int>(num.size()) ? num[k] : MultiPoly{};
        const int reach = std::min<int>(k, static_cast<int>(den.size()) - 1);
        for (int j = 1; j <= reach; ++j) {
            if (den[j].is_zero()) continue;
            c -= den[j] * table.coeffs[k - j];
        }
        table.coeffs.push_back(std::move(c));
    }
    return table;
}

inline nlohmann::json series_to_json(const SeriesTable& table) {
    auto coeffs = nlohmann::json::array();
    for (const auto& c : table.coeffs) coeffs.push_back(poly_to_json(c));
    return {{"n_max", table.n_max}, {"coeffs", coeffs}};
}

inline SeriesTable series_from_json(const nlohmann::json& j) {
    SeriesTable table{j.at("n_max").get<int>(), {}};
    for (const auto& c : j.at("coeffs")) table.coeffs.push_back(poly_from_json(c));
    return table;
}

}  // namespace patstat
