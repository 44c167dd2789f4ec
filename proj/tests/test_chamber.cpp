#include "g2cells/chamber.hpp"
#include "g2cells/deodhar.hpp"

#include <gtest/gtest.h>

using namespace g2cells;

namespace {

std::vector<Rational> Q(std::initializer_list<const char*> s) {
    std::vector<Rational> out;
    for (const char* t : s) out.push_back(parse_rational(t));
    return out;
}

} // namespace

TEST(Chamber, EpsilonAtFixedPoint) {
    const auto p = Q({"1", "2", "3", "5", "7", "11"});
    const Factorization f = epsilon_factorize(product_x(word_i_tilde(), p), word_i_tilde());
    EXPECT_FALSE(f.upper);
    EXPECT_EQ(f.params, Q({"1/11", "1/5", "55/134", "67/105", "735/1474", "2/385"}));
    EXPECT_TRUE(same_values(closed_form_epsilon(p), f.params));
}

TEST(Chamber, AlphaAtFixedPoints) {
    const Factorization f = alpha_factorize(family_point(cell_family("x21x12"), Q({"1", "2", "3", "5"})), word_i_tilde());
    EXPECT_TRUE(f.upper);
    EXPECT_EQ(f.params, Q({"-1/5", "5/8", "512/85", "17/88", "-1331/68", "2/11"}));
    EXPECT_EQ(f.signs(), "-+++-+");

    const auto p = Q({"1", "3", "5", "2"});
    const auto closed = values(closed_form_alpha("12x21x", p));
    EXPECT_EQ(closed[0], Rational(1, 2));
    EXPECT_EQ(closed[1], Rational(-1, 5));
    EXPECT_TRUE(same_values(closed_form_alpha("12x21x", p), alpha_factorize(family_point(cell_family("12x21x"), p), word_i_tilde()).params));
}

TEST(Chamber, IdentityIsNotFactorizable) {
    EXPECT_THROW(epsilon_factorize(Element::identity(), word_i_tilde()), NotFactorizable);
    EXPECT_THROW(alpha_factorize(Element::identity(), word_i_tilde()), NotFactorizable);
}

TEST(Chamber, Preconditions) {
    EXPECT_THROW(epsilon_factorize(y(1, Rational(2)), word_i_tilde()), std::invalid_argument);
    EXPECT_THROW(alpha_factorize(x(1, Rational(2)), word_i_tilde()), std::invalid_argument);
    EXPECT_THROW(epsilon_factorize(x(1, Rational(2)), WeylWord{1, 2, 1}), std::invalid_argument);
    EXPECT_THROW(closed_form_alpha("xxxxxx", Q({"1", "1", "1", "1", "1", "1"})), std::invalid_argument);
}

TEST(Chamber, TotalPositivity) {
    for (const WeylWord& w : {word_i(), word_i_tilde()}) {
        const std::vector<Rational> ones(6, Rational(1));
        EXPECT_EQ(epsilon_factorize(product_x(w, ones), w).signs(), "++++++");
        EXPECT_EQ(alpha_factorize(product_y(w, ones), w).signs(), "++++++");
    }
}

TEST(Chamber, FlagIdentity) {
    EXPECT_FALSE(flag_equal_opposed(x(1, Rational(1)), y(1, Rational(1))));
    const Element xg = product_x(word_i(), Q({"2", "-1/3", "5", "7/2", "-1", "3"}));
    const Factorization e = epsilon_factorize(xg, word_i());
    EXPECT_TRUE(flag_equal_opposed(xg, e.product()));
    EXPECT_EQ(alpha_factorize(e.product(), word_i()).product(), xg);
}

TEST(Chamber, RoundTripsAtRandomPoints) {
    ParamSampler s(17);
    int checked = 0;
    for (int k = 0; k < 40; ++k) {
        const WeylWord& w = k % 2 ? word_i() : word_i_tilde();
        const Element yg = product_y(w, s.any_vector(6));
        try {
            const Factorization a = alpha_factorize(yg, w);
            EXPECT_TRUE(flag_equal_opposed(a.product(), yg));
            EXPECT_EQ(epsilon_factorize(a.product(), w).product(), yg);
            ++checked;
        } catch (const NotFactorizable&) {
        }
    }
    EXPECT_GT(checked, 30);
}

TEST(Chamber, ClosedFormsAgreeWithMinorFormula) {
    ParamSampler s(23);
    for (const auto& fam : closed_form_families()) {
        const CellFamily& f = cell_family(fam);
        int checked = 0;
        for (int k = 0; k < 30; ++k) {
            const auto p = s.any_vector(static_cast<std::size_t>(f.t_count() + f.m_count()));
            try {
                const auto closed = closed_form_alpha(fam, p);
                EXPECT_TRUE(same_values(closed, alpha_factorize(family_point(f, p), word_i_tilde()).params)) << fam;
                ++checked;
            } catch (const NotFactorizable&) {
            }
        }
        EXPECT_GT(checked, 20) << fam;
    }
}

TEST(Chamber, QuotientEquality) {
    EXPECT_EQ((Quotient{2, 4}), (Quotient{-1, -2}));
    EXPECT_THROW((Quotient{1, 0}).value(), NotFactorizable);
}
