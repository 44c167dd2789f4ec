#ifndef G2CELLS_RATIONAL_HPP
#define G2CELLS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace g2cells {

/// Exact rational number backed by GMP.
using Rational = mpq_class;

/// Parses "p/q" or an integer string. Throws std::invalid_argument on
/// malformed input or a zero denominator.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational");

    auto valid_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };

    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (num[0] == '+') num.erase(num.begin());

    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// Comma-separated list of rationals, e.g. "1,-2/3,5".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::string s(text);
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const auto end = comma == std::string::npos ? s.size() : comma;
        out.push_back(parse_rational(std::string_view(s).substr(start, end - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

/// a/b == c/d decided as a*d == c*b, without forming the quotients.
inline bool cross_equal(const Rational& a_num, const Rational& a_den,
                        const Rational& b_num, const Rational& b_den) {
    return a_num * b_den == b_num * a_den;
}

/// Sign string over {+,-}; zero entries are printed as '0'.
inline std::string sign_string(const std::vector<Rational>& values) {
    std::string s;
    s.reserve(values.size());
    for (const auto& v : values) s.push_back(sgn(v) > 0 ? '+' : (sgn(v) < 0 ? '-' : '0'));
    return s;
}

} // namespace g2cells

#endif // G2CELLS_RATIONAL_HPP
