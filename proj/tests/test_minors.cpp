#include "g2cells/deodhar.hpp"
#include "g2cells/fixtures.hpp"
#include "g2cells/minors.hpp"

#include <gtest/gtest.h>

using namespace g2cells;

namespace {

const WeylGroup& W() { return WeylGroup::g2(); }
const std::vector<std::string> kNames{"a", "b", "c", "d", "e", "f"};

SymbolicElement symbolic_x_tilde() {
    std::vector<Polynomial> vars;
    for (std::size_t k = 0; k < 6; ++k) vars.push_back(Polynomial::variable(k));
    return product_x<Polynomial>(word_i_tilde(), vars);
}

} // namespace

TEST(Minors, ChamberWeightsOfEachLevel) {
    std::set<std::string> level1, level2;
    for (const auto& w : W().elements()) {
        level1.insert(epsilon_name(chamber_weight(w, 1).weight));
        level2.insert(epsilon_name(chamber_weight(w, 2).weight));
    }
    EXPECT_EQ(level1, (std::set<std::string>{"e1", "e2", "e3", "-e1", "-e2", "-e3"}));
    EXPECT_EQ(level2, (std::set<std::string>{"e1-e2", "e1-e3", "e2-e3", "e2-e1", "e3-e1", "e3-e2"}));
}

TEST(Minors, WeightToChamber) {
    auto c = weight_to_chamber("e1");
    EXPECT_EQ(c.w, W().identity());
    EXPECT_EQ(c.level, 1);
    // w0 also sends e1 to -e1, but w0 s2 is shorter and s2 fixes omega_1
    c = weight_to_chamber("-e1");
    EXPECT_EQ(c.w, W().multiply(W().longest(), W().generator(2)));
    EXPECT_EQ(W().length(c.w), 5);
    c = weight_to_chamber("e3-e2");
    EXPECT_EQ(W().name(c.w), "s2s1s2");
    EXPECT_EQ(c.level, 2);
    EXPECT_THROW(weight_to_chamber(Weight{2, 0}), std::invalid_argument);
    EXPECT_THROW(weight_to_chamber(Weight{0, 0}), std::invalid_argument);
}

TEST(Minors, WeightToChamberIsMinimalLength) {
    for (int level : {1, 2})
        for (const auto& w : W().elements()) {
            const Weight mu = W().act(w, Weight::fundamental(level));
            const auto c = weight_to_chamber(mu);
            EXPECT_EQ(c.level, level);
            EXPECT_EQ(c.weight, mu);
            EXPECT_LE(W().length(c.w), W().length(w));
        }
}

TEST(Minors, ExtremalVectors) {
    const auto& top = extremal_vector(1, W().identity());
    EXPECT_EQ(top.coords[0], 1);
    for (std::size_t k = 1; k < 7; ++k) EXPECT_EQ(top.coords[k], 0);
    for (int level : {1, 2})
        for (const auto& w : W().elements()) {
            const auto& v = extremal_vector(level, w);
            EXPECT_EQ(v.weight, W().act(w, Weight::fundamental(level)));
            int nonzero = 0;
            for (const auto& q : v.coords) {
                EXPECT_EQ(q.get_den(), 1);
                if (q != 0) {
                    ++nonzero;
                    EXPECT_EQ(abs(q), 1);
                }
            }
            EXPECT_EQ(nonzero, 1);
        }
    EXPECT_EQ(lowest_vector(1).weight, (Weight{-1, 0}));
    EXPECT_EQ(lowest_vector(1).coords[6], 1);
    EXPECT_EQ(lowest_vector(2).coords[13], -1);
}

TEST(Minors, ExtremalVectorIsWordIndependent) {
    for (int level : {1, 2}) {
        const auto a = detail::extremal_along(level, word_i());
        const auto b = detail::extremal_along(level, word_i_tilde());
        EXPECT_EQ(a.coords, b.coords);
    }
}

TEST(Minors, SymbolicExamples) {
    const SymbolicElement g = symbolic_x_tilde();
    EXPECT_EQ(minor(g, weight_to_chamber("e1")).to_string(kNames), "1");
    EXPECT_EQ(minor(g, weight_to_chamber("-e3")), Polynomial::parse("f+d+b", kNames));
    EXPECT_EQ(minor(g, weight_to_chamber("e3-e1")), Polynomial::parse("a*b^3*c^2*d^3*e", kNames));
}

TEST(Minors, AllTwelveSymbolicMinors) {
    const SymbolicElement g = symbolic_x_tilde();
    ASSERT_EQ(fixtures::symbolic_minors().size(), minor_table_labels().size());
    for (std::size_t k = 0; k < minor_table_labels().size(); ++k) {
        const auto& [label, text] = fixtures::symbolic_minors()[k];
        EXPECT_EQ(label, minor_table_labels()[k]);
        EXPECT_EQ(minor(g, weight_to_chamber(label)), Polynomial::parse(text, kNames)) << label;
    }
}

TEST(Minors, RationalAgreesWithSymbolic) {
    const SymbolicElement g = symbolic_x_tilde();
    const std::vector<Rational> p{Rational(1, 2), -3, Rational(5, 7), 2, Rational(-11, 3), 13};
    const Element h = product_x(word_i_tilde(), p);
    for (const auto& label : minor_table_labels()) {
        const auto cw = weight_to_chamber(label);
        EXPECT_EQ(minor(h, cw), minor(g, cw).evaluate(p)) << label;
    }
}

TEST(Minors, LowerMinors) {
    EXPECT_EQ(minor_lower(Element::identity(), chamber_weight(W().longest(), 1)), 1);
    EXPECT_EQ(minor_lower(Element::identity(), chamber_weight(W().longest(), 2)), 1);
    EXPECT_EQ(minor_lower(wdot(W().longest()), chamber_weight(W().identity(), 1)), 1);
    EXPECT_EQ(minor_lower(wdot(W().longest()), chamber_weight(W().identity(), 2)), 1);
    const Element y = product_y(word_i_tilde(), std::vector<Rational>(6, Rational(1)));
    WeylElement u = W().identity();
    for (int i : word_i_tilde()) {
        u = W().multiply(u, W().generator(i));
        EXPECT_NE(minor_lower(y, weight_to_chamber(-W().act(u, Weight::fundamental(i)))), 0);
    }
}

TEST(Minors, PrincipalMinorIsOneOnUnipotentProducts) {
    ParamSampler s(9);
    for (int k = 0; k < 10; ++k) {
        const Element g = product_y(word_i(), s.any_vector(6)) * product_x(word_i_tilde(), s.any_vector(6));
        for (int level : {1, 2}) EXPECT_EQ(minor(g, chamber_weight(W().identity(), level)), 1);
    }
}
