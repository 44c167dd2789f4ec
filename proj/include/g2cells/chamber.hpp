#ifndef G2CELLS_CHAMBER_HPP
#define G2CELLS_CHAMBER_HPP

#include "g2cells/minors.hpp"
#include "g2cells/rep.hpp"
#include "g2cells/weyl.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2cells {

/// A point outside the open chart of a factorization (some minor or denominator vanishes).
class NotFactorizable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Factorization {
    WeylWord word;
    std::vector<Rational> params;
    bool upper = false;

    Element product() const { return upper ? product_x(word, params) : product_y(word, params); }
    std::string signs() const { return sign_string(params); }
};

namespace detail {

inline void require_longest_word(const WeylWord& word, const char* who) {
    const auto& W = WeylGroup::g2();
    if (!W.is_reduced(word) || W.from_word(word) != W.longest())
        throw std::invalid_argument(std::string(who) + ": " + word_string(word) + " is not a reduced word of w0");
}

/*
 * a_p = prod_{j != i_p} D(u_p w_j)^{-A_{j,i_p}} / (D(u_p w_{i_p}) D(u_{p-1} w_{i_p}))
 * with u_p = s_{i_1} ... s_{i_p}. D gives the minor for a chamber weight.
 */
inline std::vector<Rational> ansatz(const WeylWord& word, const std::function<Rational(const WeylElement&, int)>& D) {
    const auto& W = WeylGroup::g2();
    const auto& A = W.cartan();
    std::vector<Rational> out;
    WeylElement prev = W.identity();
    for (std::size_t p = 0; p < word.size(); ++p) {
        const int i = word[p];
        const WeylElement cur = W.multiply(prev, W.generator(i));
        const Rational den = D(cur, i) * D(prev, i);
        if (den == 0) throw NotFactorizable("vanishing minor at step " + std::to_string(p + 1));
        Rational num = 1;
        for (int j = 1; j <= 2; ++j) {
            if (j == i) continue;
            const Rational m = D(cur, j);
            for (int k = 0; k < -A(j, i); ++k) num *= m;
        }
        if (num == 0) throw NotFactorizable("zero parameter at step " + std::to_string(p + 1));
        out.push_back(num / den);
        prev = cur;
    }
    return out;
}

} // namespace detail

/// y = y_{j_1}(a_1) ... y_{j_N}(a_N) with x.[B^-] = y.[B^+].
inline Factorization epsilon_factorize(const Element& x, const WeylWord& word) {
    if (!is_unipotent_upper(x)) throw std::invalid_argument("epsilon_factorize: input is not unipotent upper");
    detail::require_longest_word(word, "epsilon_factorize");
    auto D = [&](const WeylElement& u, int j) { return minor(x, chamber_weight(u, j)); };
    return Factorization{word, detail::ansatz(word, D), false};
}

/// x = x_{j_1}(a_1) ... x_{j_N}(a_N) with x.[B^-] = y.[B^+].
inline Factorization alpha_factorize(const Element& y, const WeylWord& word) {
    if (!is_unipotent_lower(y)) throw std::invalid_argument("alpha_factorize: input is not unipotent lower");
    detail::require_longest_word(word, "alpha_factorize");
    const auto& W = WeylGroup::g2();
    auto D = [&](const WeylElement& u, int j) {
        const Weight mu = -W.act(u, Weight::fundamental(j));
        return minor_lower(y, weight_to_chamber(mu));
    };
    return Factorization{word, detail::ansatz(word, D), true};
}

/// x.[B^-] == y.[B^+], tested as y^{-1} x w0dot in B^+.
inline bool flag_equal_opposed(const Element& x, const Element& y) {
    const RationalMatrix m = inverse(y.m7()) * x.m7() * wdot(WeylGroup::g2().longest()).m7();
    return m.is_upper_triangular();
}

/// A value num/den of a rational function, kept as the pair.
struct Quotient {
    Rational num;
    Rational den;

    Rational value() const {
        if (den == 0) throw NotFactorizable("zero denominator");
        return num / den;
    }
    friend bool operator==(const Quotient& a, const Quotient& b) { return cross_equal(a.num, a.den, b.num, b.den); }
};

inline bool same_values(const std::vector<Quotient>& q, const std::vector<Rational>& v) {
    if (q.size() != v.size()) return false;
    for (std::size_t k = 0; k < q.size(); ++k)
        if (!cross_equal(q[k].num, q[k].den, v[k], 1)) return false;
    return true;
}

namespace detail {
inline Rational cube(const Rational& a) { return a * a * a; }
inline Rational sq(const Rational& a) { return a * a; }

inline std::vector<Quotient> checked(std::vector<Quotient> q) {
    for (const auto& v : q)
        if (v.den == 0) throw NotFactorizable("closed form has a vanishing denominator");
    return q;
}
} // namespace detail

/// Closed forms of epsilon on x_{212121}(a, ..., f).
inline std::vector<Quotient> closed_form_epsilon(const std::vector<Rational>& p) {
    using detail::cube;
    using detail::sq;
    if (p.size() != 6) throw std::invalid_argument("closed_form_epsilon needs six parameters");
    const Rational &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4], &f = p[5];
    const Rational s1 = e + c + a;
    const Rational s2 = e * d + e * b + b * c;
    const Rational u = sq(e) * cube(d) * c + sq(e) * cube(d) * a + 3 * sq(e) * a * b * sq(d) +
                       3 * sq(e) * a * sq(b) * d + sq(e) * a * cube(b) + 3 * e * a * sq(b) * c * d +
                       2 * e * a * cube(b) * c + a * cube(b) * sq(c);
    return detail::checked({{1, s1},
                            {s1, s2},
                            {cube(s2), u * s1},
                            {u, b * c * sq(d) * e * s2},
                            {sq(e) * cube(d) * c, a * u},
                            {a * b, d * e * f}});
}

/// Families with an alpha closed form, in reference table order.
inline const std::vector<std::string>& closed_form_families() {
    static const std::vector<std::string> names{"1x12x2", "xx1x1x", "1x1xxx", "12x21x", "xxx2x2", "x2x2xx", "x21x12"};
    return names;
}

/// Closed forms of alpha on y_family, parameters in positional order.
inline std::vector<Quotient> closed_form_alpha(const std::string& family, const std::vector<Rational>& p) {
    using detail::cube;
    using detail::sq;
    auto need = [&](std::size_t n) {
        if (p.size() != n) throw std::invalid_argument("closed_form_alpha(" + family + ") needs " + std::to_string(n) + " parameters");
    };
    if (family == "x21x12") {
        need(4);
        const Rational &t1 = p[0], &t2 = p[1], &m1 = p[2], &m2 = p[3];
        const Rational P = t1 * m2 + m1, Q = -m2 * t2 + cube(m1), R = t1 * sq(m1) + t2;
        return detail::checked({{-1, m2}, {m2, P}, {cube(P), m2 * Q}, {Q, P * R}, {-cube(R), Q * sq(t2)}, {t2, R * t1}});
    }
    if (family == "12x21x") {
        need(4);
        const Rational &t1 = p[0], &m1 = p[1], &m2 = p[2], &t2 = p[3];
        const Rational P = 3 * t1 * m2 + m1, Q = 2 * t1 * m2 + m1;
        return detail::checked({{1, t2}, {-1, m2}, {cube(m2), P}, {P, m2 * Q}, {cube(Q), P * cube(t1)}, {-t1, Q}});
    }
    if (family == "1x12x2") {
        need(4);
        const Rational &t1 = p[0], &m1 = p[1], &t2 = p[2], &m2 = p[3];
        const Rational P = m1 * m2 + t2, Q = t1 * sq(m2) - cube(t2), R = t1 * m2 + m1 * sq(t2);
        return detail::checked({{-1, m2}, {-m2, P}, {-cube(P), m2 * Q}, {Q, P * R}, {cube(R), Q * t1 * cube(t2)}, {sq(t2), R}});
    }
    if (family == "xx1x1x") {
        need(5);
        const Rational &t1 = p[0], &t2 = p[1], &t3 = p[2], &m1 = p[3], &t4 = p[4];
        const Rational S = t2 + t4;
        const Rational P = t1 * t2 - m1 * t4 + t4 * t1;
        const Rational Q = -t2 * t3 + t4 * cube(m1) * t2 - t4 * t3;
        const Rational R = t1 * t2 * sq(m1) - t3;
        return detail::checked({{1, S}, {S, P}, {-cube(P), S * t4 * Q}, {-Q, R * P}, {cube(R) * t4, Q * t2 * sq(t3)}, {-t3, R * t1}});
    }
    if (family == "1x1xxx") {
        need(5);
        const Rational &t1 = p[0], &m1 = p[1], &t2 = p[2], &t3 = p[3], &t4 = p[4];
        const Rational S = t2 + t4;
        const Rational P = m1 * t2 + m1 * t4 - t4 * t3;
        const Rational Q = t1 * sq(t2) + 2 * t1 * t2 * t4 + sq(t4) * t1 + t2 * cube(t3) * sq(t4);
        const Rational R = t1 * t2 + t4 * t1 + t2 * sq(t3) * t4 * m1;
        return detail::checked({{1, S},
                                {-S, P},
                                {-cube(P), S * Q},
                                {Q, P * R},
                                {-cube(R), Q * t1 * sq(t2) * cube(t3) * t4},
                                {t2 * sq(t3) * t4, R}});
    }
    if (family == "xxx2x2") {
        need(5);
        const Rational &t1 = p[0], &t2 = p[1], &t3 = p[2], &t4 = p[3], &m1 = p[4];
        const Rational S = m1 - t2;
        const Rational P = t1 * m1 + m1 * t3 - t1 * t2 - t4;
        const Rational Q = t2 * cube(t3) * sq(m1) - 3 * t2 * sq(t3) * t4 * m1 + 3 * t2 * t3 * sq(t4) - cube(t4);
        const Rational R = t1 * t2 * sq(t3) * m1 - 2 * t1 * t2 * t3 * t4 + sq(t4) * t1 + t3 * sq(t4);
        return detail::checked({{-1, S},
                                {S, P},
                                {cube(P), S * Q},
                                {Q, P * R},
                                {-cube(R), Q * t2 * cube(t3) * cube(t4)},
                                {t3 * sq(t4), R * t1}});
    }
    if (family == "x2x2xx") {
        need(5);
        const Rational &t1 = p[0], &t2 = p[1], &m1 = p[2], &t3 = p[3], &t4 = p[4];
        const Rational S = m1 - t4;
        const Rational P = t1 * m1 - t2 - t4 * t1 - t4 * t3;
        const Rational Q = cube(t2) + 3 * sq(t2) * t3 * t4 + 3 * t2 * sq(t3) * sq(t4) + sq(t4) * m1 * cube(t3);
        const Rational R = t1 * sq(t2) + 2 * t1 * t2 * t3 * t4 + t4 * sq(t3) * t1 * m1 - t2 * sq(t3) * t4;
        return detail::checked({{-1, S},
                                {S, P},
                                {-cube(P), S * Q},
                                {-Q, P * R},
                                {-cube(R), Q * cube(t2) * cube(t3) * t4},
                                {-t2 * sq(t3) * t4, R * t1}});
    }
    throw std::invalid_argument("no closed form for family '" + family + "'");
}

inline std::vector<Rational> values(const std::vector<Quotient>& q) {
    std::vector<Rational> out;
    for (const auto& v : q) out.push_back(v.value());
    return out;
}

} // namespace g2cells

#endif // G2CELLS_CHAMBER_HPP
