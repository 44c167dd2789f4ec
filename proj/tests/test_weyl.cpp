#include "g2cells/weyl.hpp"

#include <gtest/gtest.h>

#include <array>
#include <map>
#include <set>

using namespace g2cells;

namespace {

const WeylGroup& W() { return WeylGroup::g2(); }

WeylElement el(const std::string& word) { return W().from_word(parse_word(word)); }

// Oracle: the group as 2x2 integer matrices on fundamental-weight coordinates.
using Mat2 = std::array<int, 4>;

Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 reflection(int i) {
    // s_i(mu) = mu - c_i alpha_i, alpha_1 = (2,-1), alpha_2 = (-3,2)
    return i == 1 ? Mat2{-1, 0, 1, 1} : Mat2{1, 3, 0, -1};
}

Mat2 oracle(const WeylWord& w) {
    Mat2 m{1, 0, 0, 1};
    for (int i : w) m = mul(m, reflection(i));
    return m;
}

// All words up to length 6, grouped by oracle matrix, keeping the shortest ones.
std::map<Mat2, std::vector<WeylWord>> oracle_reduced_words() {
    std::map<Mat2, std::vector<WeylWord>> out;
    std::vector<WeylWord> layer{{}};
    for (int len = 0; len <= 6; ++len) {
        std::vector<WeylWord> next;
        for (const auto& w : layer) {
            const Mat2 m = oracle(w);
            auto it = out.find(m);
            if (it == out.end() || it->second.front().size() == w.size()) out[m].push_back(w);
            for (int i = 1; i <= 2; ++i) {
                WeylWord v = w;
                v.push_back(i);
                next.push_back(v);
            }
        }
        layer = std::move(next);
    }
    return out;
}

bool is_subword(const WeylWord& u, const WeylWord& w) {
    std::size_t k = 0;
    for (int i : w)
        if (k < u.size() && u[k] == i) ++k;
    return k == u.size();
}

} // namespace

TEST(Weyl, GroupHasTwelveElements) {
    EXPECT_EQ(W().order(), 12u);
    EXPECT_EQ(W().length(W().longest()), 6);
    EXPECT_EQ(W().name(W().longest()), "s1s2s1s2s1s2");
    EXPECT_EQ(W().name(W().identity()), "1");
}

TEST(Weyl, MultiplyExamples) {
    EXPECT_EQ(W().multiply(el("1"), el("1")), W().identity());
    EXPECT_EQ(W().multiply(el("1"), el("21212")), W().longest());
    EXPECT_EQ(W().from_word(word_i()), W().from_word(word_i_tilde()));
}

TEST(Weyl, MultiplicationTableMatchesMatrixModel) {
    for (const auto& u : W().elements())
        for (const auto& w : W().elements()) {
            const auto prod = W().multiply(u, w);
            EXPECT_EQ(oracle(W().canonical_word(prod)), mul(oracle(W().canonical_word(u)), oracle(W().canonical_word(w))));
        }
}

TEST(Weyl, CanonicalWordIsLexLeastReduced) {
    const auto words = oracle_reduced_words();
    EXPECT_EQ(words.size(), 12u);
    for (const auto& w : W().elements()) {
        const auto& reduced = words.at(oracle(W().canonical_word(w)));
        EXPECT_EQ(W().canonical_word(w), *std::min_element(reduced.begin(), reduced.end()));
        std::set<WeylWord> mine;
        for (const auto& r : W().reduced_words(w)) mine.insert(r);
        EXPECT_EQ(mine, std::set<WeylWord>(reduced.begin(), reduced.end()));
    }
}

TEST(Weyl, LengthChangesByOne) {
    for (const auto& w : W().elements())
        for (int i = 1; i <= 2; ++i) EXPECT_EQ(std::abs(W().length(W().multiply(w, W().generator(i))) - W().length(w)), 1);
}

TEST(Weyl, BruhatExamples) {
    EXPECT_TRUE(W().bruhat_leq(el("1"), el("12")));
    EXPECT_FALSE(W().bruhat_leq(W().longest(), el("1")));
    EXPECT_FALSE(W().bruhat_leq(el("121"), el("212")));
    EXPECT_FALSE(W().bruhat_less(el("12"), el("12")));
}

TEST(Weyl, BruhatMatchesSubwordOracle) {
    const auto words = oracle_reduced_words();
    for (const auto& u : W().elements())
        for (const auto& w : W().elements()) {
            bool want = false;
            for (const auto& a : words.at(oracle(W().canonical_word(u))))
                for (const auto& b : words.at(oracle(W().canonical_word(w)))) want = want || is_subword(a, b);
            EXPECT_EQ(W().bruhat_leq(u, w), want);
            if (W().bruhat_less(u, w)) { EXPECT_LT(W().length(u), W().length(w)); }
        }
}

TEST(Weyl, ActionOnWeights) {
    EXPECT_EQ(W().act(el("1"), Weight::fundamental(1)), (Weight{-1, 1}));
    EXPECT_EQ(W().act(W().longest(), Weight::fundamental(1)), (Weight{-1, 0}));
    EXPECT_EQ(W().act(W().longest(), Weight::fundamental(2)), (Weight{0, -1}));
}

TEST(Weyl, DistinguishedOf121212) {
    std::set<std::string> names;
    for (const auto& s : W().enumerate_distinguished(word_i())) {
        names.insert(s.name());
        EXPECT_EQ(s.I().size() + s.J().size() + s.K().size(), 6u);
        EXPECT_EQ(s.J().size(), s.K().size());
        EXPECT_EQ(s.sigma.front(), W().identity());
        EXPECT_EQ(s.sigma.back(), W().identity());
    }
    EXPECT_EQ(names, (std::set<std::string>{"xxxxxx", "1x1xxx", "x2x2xx", "xx1x1x", "xxx2x2", "1x12x2", "12x21x", "x21x12"}));
}

TEST(Weyl, DistinguishedSmallWords) {
    EXPECT_EQ(W().enumerate_distinguished({}).size(), 1u);
    const auto s = W().enumerate_distinguished({1, 2, 1});
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0].name(), "xxx");
    EXPECT_EQ(s[1].name(), "1x1");
    EXPECT_EQ(W().enumerate_distinguished(word_i_tilde()).size(), 8u);
}

TEST(Weyl, DistinguishedMatchesBruteForce) {
    for (const WeylWord& word : {WeylWord{1, 2, 1, 2}, WeylWord{2, 1, 2, 1, 2}, word_i()}) {
        std::set<std::string> want;
        const std::size_t n = word.size();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            WeylElement cur = W().identity();
            bool ok = true;
            std::string name;
            for (std::size_t j = 0; j < n; ++j) {
                const WeylElement next = W().multiply(cur, W().generator(word[j]));
                const bool take = (mask >> j) & 1;
                if (!take && W().length(next) < W().length(cur)) ok = false;
                if (take) cur = next;
                name.push_back(take ? static_cast<char>('0' + word[j]) : 'x');
            }
            if (ok && cur == W().identity()) want.insert(name);
        }
        std::set<std::string> got;
        for (const auto& s : W().enumerate_distinguished(word)) got.insert(s.name());
        EXPECT_EQ(got, want) << word_string(word);
    }
}

TEST(Weyl, NonReducedWordRejected) {
    EXPECT_THROW(W().enumerate_distinguished({1, 1}), std::invalid_argument);
    EXPECT_THROW(parse_word("123"), std::invalid_argument);
    EXPECT_EQ(parse_word("1,2,1"), (WeylWord{1, 2, 1}));
}
