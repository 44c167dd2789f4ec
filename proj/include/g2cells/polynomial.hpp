#ifndef G2CELLS_POLYNOMIAL_HPP
#define G2CELLS_POLYNOMIAL_HPP

#include "g2cells/rational.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2cells {

/*
 * Sparse multivariate polynomial over the rationals.
 *
 * Variables are positional (index 0 .. kMaxVariables-1); names are supplied
 * only when printing or parsing. The zero polynomial has no terms and no
 * stored term ever has a zero coefficient.
 *
 * Printing uses graded lexicographic order, highest term first. Variables
 * are ordered by index (index 0 smallest), so among monomials of equal total
 * degree the one with the larger exponent of the highest-index variable
 * comes first.
 */
class Polynomial {
public:
    static constexpr std::size_t kMaxVariables = 8;
    using Exponents = std::array<std::uint16_t, kMaxVariables>;

    Polynomial() = default;
    Polynomial(int c) : Polynomial(Rational(c)) {}
    Polynomial(const Rational& c) {
        if (c != 0) terms_.emplace(Exponents{}, c);
    }

    static Polynomial variable(std::size_t index) {
        if (index >= kMaxVariables) throw std::out_of_range("polynomial variable index");
        Exponents e{};
        e[index] = 1;
        Polynomial p;
        p.terms_.emplace(e, Rational(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
        return d;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) accumulate(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) accumulate(e, -c);
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e{};
                for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = ea[i] + eb[i];
                r.accumulate(e, ca * cb);
            }
        return r;
    }
    friend Polynomial operator/(const Polynomial& a, const Rational& q) {
        if (q == 0) throw std::domain_error("polynomial division by zero");
        Polynomial r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c / q);
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned k) const {
        Polynomial r(1);
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    /// Substitutes rational values for the first values.size() variables.
    /// Every variable occurring in the polynomial must be covered.
    Rational evaluate(const std::vector<Rational>& values) const {
        Rational sum = 0;
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (std::size_t i = 0; i < kMaxVariables; ++i) {
                if (e[i] == 0) continue;
                if (i >= values.size()) throw std::invalid_argument("polynomial evaluate: missing variable value");
                for (std::uint16_t k = 0; k < e[i]; ++k) term *= values[i];
            }
            sum += term;
        }
        return sum;
    }

    /// Terms in canonical (descending graded lexicographic) order.
    std::vector<std::pair<Exponents, Rational>> sorted_terms() const {
        std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return grlex_greater(x.first, y.first); });
        return out;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : sorted_terms()) {
            Rational mag = abs(c);
            if (first) {
                if (sgn(c) < 0) os << "-";
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
            }
            first = false;
            bool wrote = false;
            if (mag != 1 || degree_of(e) == 0) {
                os << mag.get_str();
                wrote = true;
            }
            for (std::size_t i = 0; i < kMaxVariables; ++i) {
                if (e[i] == 0) continue;
                if (i >= names.size()) throw std::invalid_argument("polynomial to_string: missing variable name");
                if (wrote) os << "*";
                os << names[i];
                if (e[i] > 1) os << "^" << e[i];
                wrote = true;
            }
        }
        return os.str();
    }

    /// Parses sums of terms like "3*a*b^2*d - f^3 + 1/2*c". Whitespace is ignored.
    static Polynomial parse(const std::string& text, const std::vector<std::string>& names);

private:
    static int degree_of(const Exponents& e) {
        int d = 0;
        for (auto k : e) d += k;
        return d;
    }

    static bool grlex_greater(const Exponents& x, const Exponents& y) {
        const int dx = degree_of(x), dy = degree_of(y);
        if (dx != dy) return dx > dy;
        for (std::size_t i = kMaxVariables; i-- > 0;)
            if (x[i] != y[i]) return x[i] > y[i];
        return false;
    }

    void accumulate(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Exponents, Rational> terms_;
};

inline Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& names) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty polynomial");

    Polynomial result;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(pos) + ": " + why);
    };
    auto read_uint = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected digits");
        return s.substr(start, pos - start);
    };

    while (pos < s.size()) {
        int term_sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            term_sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            fail("expected '+' or '-'");
        }
        Polynomial term(term_sign);
        bool need_factor = true;
        while (need_factor) {
            if (pos >= s.size()) fail("unexpected end");
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                std::string num = read_uint();
                std::string den = "1";
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    den = read_uint();
                }
                term = term * Polynomial(parse_rational(num + "/" + den));
            } else {
                std::size_t best = names.size();
                std::size_t best_len = 0;
                for (std::size_t i = 0; i < names.size(); ++i)
                    if (s.compare(pos, names[i].size(), names[i]) == 0 && names[i].size() > best_len) {
                        best = i;
                        best_len = names[i].size();
                    }
                if (best == names.size()) fail("unknown variable");
                pos += best_len;
                unsigned power = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    power = static_cast<unsigned>(std::stoul(read_uint()));
                }
                term = term * variable(best).pow(power);
            }
            need_factor = pos < s.size() && s[pos] == '*';
            if (need_factor) ++pos;
        }
        result += term;
    }
    return result;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    static const std::vector<std::string> names{"x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7"};
    return os << p.to_string(names);
}

} // namespace g2cells

#endif // G2CELLS_POLYNOMIAL_HPP
