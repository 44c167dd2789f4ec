#ifndef G2CELLS_WEYL_HPP
#define G2CELLS_WEYL_HPP

#include "g2cells/weight.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2cells {

/// Sequence of generator indices in {1, 2}.
using WeylWord = std::vector<int>;

inline WeylWord parse_word(const std::string& text) {
    WeylWord w;
    for (char ch : text) {
        if (ch == ',' || ch == ' ') continue;
        if (ch != '1' && ch != '2') throw std::invalid_argument("word letters must be 1 or 2: '" + text + "'");
        w.push_back(ch - '0');
    }
    return w;
}

inline std::string word_string(const WeylWord& w) {
    std::string s;
    for (int i : w) s.push_back(static_cast<char>('0' + i));
    return s;
}

/// The reduced words (1,2,1,2,1,2) and (2,1,2,1,2,1) of the longest element.
inline const WeylWord& word_i() {
    static const WeylWord w{1, 2, 1, 2, 1, 2};
    return w;
}
inline const WeylWord& word_i_tilde() {
    static const WeylWord w{2, 1, 2, 1, 2, 1};
    return w;
}

/*
 * Weyl group element, realized as the permutation it induces on the orbit
 * of the short simple root (the six short roots for G2). perm[k] is the
 * orbit index of w(root_k).
 */
struct WeylElement {
    static constexpr std::size_t kMaxOrbit = 6;
    std::array<std::uint8_t, kMaxOrbit> perm{};

    friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

enum class StepKind : char { Stay = 'I', Up = 'J', Down = 'K' };

/*
 * Subexpression sigma = (sigma_0, ..., sigma_N) of a word with sigma_0 = 1.
 * Positions are 1-based in the index sets, matching the step numbering.
 */
struct Subexpression {
    WeylWord word;
    std::vector<WeylElement> sigma;
    std::vector<StepKind> steps;

    std::vector<int> positions(StepKind k) const {
        std::vector<int> out;
        for (std::size_t j = 0; j < steps.size(); ++j)
            if (steps[j] == k) out.push_back(static_cast<int>(j + 1));
        return out;
    }
    std::vector<int> I() const { return positions(StepKind::Stay); }
    std::vector<int> J() const { return positions(StepKind::Up); }
    std::vector<int> K() const { return positions(StepKind::Down); }

    /// 'x' where the letter is skipped, the letter itself where it is taken.
    std::string name() const {
        std::string s;
        for (std::size_t j = 0; j < steps.size(); ++j)
            s.push_back(steps[j] == StepKind::Stay ? 'x' : static_cast<char>('0' + word[j]));
        return s;
    }
};

class WeylGroup {
public:
    explicit WeylGroup(const CartanMatrix& cartan) : cartan_(cartan) {
        build_orbit();
        build_elements();
    }

    static const WeylGroup& g2() {
        static const WeylGroup w(CartanMatrix::g2());
        return w;
    }

    const CartanMatrix& cartan() const { return cartan_; }
    std::size_t order() const { return elements_.size(); }

    /// All elements, ordered by length and then by canonical word.
    const std::vector<WeylElement>& elements() const { return elements_; }

    WeylElement identity() const {
        WeylElement e;
        for (std::size_t k = 0; k < WeylElement::kMaxOrbit; ++k) e.perm[k] = static_cast<std::uint8_t>(k);
        return e;
    }
    WeylElement generator(int i) const { return generators_.at(i - 1); }
    WeylElement longest() const { return elements_.back(); }

    WeylElement multiply(const WeylElement& u, const WeylElement& w) const {
        WeylElement r = identity();
        for (std::size_t k = 0; k < orbit_.size(); ++k) r.perm[k] = u.perm[w.perm[k]];
        return r;
    }

    WeylElement inverse(const WeylElement& w) const {
        WeylElement r = identity();
        for (std::size_t k = 0; k < orbit_.size(); ++k) r.perm[w.perm[k]] = static_cast<std::uint8_t>(k);
        return r;
    }

    WeylElement from_word(const WeylWord& word) const {
        WeylElement r = identity();
        for (int i : word) r = multiply(r, generator(i));
        return r;
    }

    /// Lexicographically least reduced word.
    const WeylWord& canonical_word(const WeylElement& w) const { return info(w).word; }
    int length(const WeylElement& w) const { return static_cast<int>(info(w).word.size()); }
    std::string name(const WeylElement& w) const {
        const auto& word = canonical_word(w);
        if (word.empty()) return "1";
        std::string s;
        for (int i : word) s += "s" + std::to_string(i);
        return s;
    }

    bool is_reduced(const WeylWord& word) const { return length(from_word(word)) == static_cast<int>(word.size()); }

    /// w(mu), applying the canonical word right to left.
    Weight act(const WeylElement& w, Weight mu) const {
        const auto& word = canonical_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) mu = reflect(cartan_, *it, mu);
        return mu;
    }

    /// Subword property over the canonical reduced word of w.
    bool bruhat_leq(const WeylElement& u, const WeylElement& w) const {
        const int lu = length(u), lw = length(w);
        if (lu > lw) return false;
        const auto& word = canonical_word(w);
        const std::size_t n = word.size();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != lu) continue;
            WeylElement p = identity();
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (1u << k)) p = multiply(p, generator(word[k]));
            if (p == u) return true;
        }
        return false;
    }

    bool bruhat_less(const WeylElement& u, const WeylElement& w) const { return u != w && bruhat_leq(u, w); }

    /// All reduced words of w, in lexicographic order.
    std::vector<WeylWord> reduced_words(const WeylElement& w) const {
        std::vector<WeylWord> out;
        const int l = length(w);
        WeylWord word(static_cast<std::size_t>(l), 1);
        for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
            for (int k = 0; k < l; ++k) word[static_cast<std::size_t>(k)] = (mask >> (l - 1 - k)) & 1u ? 2 : 1;
            if (from_word(word) == w) out.push_back(word);
        }
        return out;
    }

    /*
     * All distinguished subexpressions for 1 of a reduced word. Depth-first
     * with the "stay" branch explored before the "move" branch, so the
     * all-skip subexpression comes first.
     */
    std::vector<Subexpression> enumerate_distinguished(const WeylWord& word) const {
        if (!is_reduced(word)) throw std::invalid_argument("enumerate_distinguished: word " + word_string(word) + " is not reduced");
        std::vector<Subexpression> out;
        Subexpression current;
        current.word = word;
        current.sigma.push_back(identity());
        extend(word, current, out);
        return out;
    }

private:
    struct Info {
        WeylWord word;
    };

    const Info& info(const WeylElement& w) const {
        auto it = info_.find(w);
        if (it == info_.end()) throw std::logic_error("element not in Weyl group");
        return it->second;
    }

    void extend(const WeylWord& word, Subexpression& cur, std::vector<Subexpression>& out) const {
        const std::size_t j = cur.steps.size();
        if (j == word.size()) {
            if (cur.sigma.back() == identity()) out.push_back(cur);
            return;
        }
        const WeylElement prev = cur.sigma.back();
        const WeylElement moved = multiply(prev, generator(word[j]));
        const bool goes_down = length(moved) < length(prev);
        if (!goes_down) {
            cur.sigma.push_back(prev);
            cur.steps.push_back(StepKind::Stay);
            extend(word, cur, out);
            cur.sigma.pop_back();
            cur.steps.pop_back();
        }
        cur.sigma.push_back(moved);
        cur.steps.push_back(goes_down ? StepKind::Down : StepKind::Up);
        extend(word, cur, out);
        cur.sigma.pop_back();
        cur.steps.pop_back();
    }

    void build_orbit() {
        const Weight start = simple_root(cartan_, cartan_.short_index());
        orbit_.push_back(start);
        for (std::size_t k = 0; k < orbit_.size(); ++k)
            for (int i = 1; i <= 2; ++i) {
                const Weight r = reflect(cartan_, i, orbit_[k]);
                if (std::find(orbit_.begin(), orbit_.end(), r) == orbit_.end()) orbit_.push_back(r);
            }
        if (orbit_.size() > WeylElement::kMaxOrbit) throw std::logic_error("short-root orbit too large");
        for (int i = 1; i <= 2; ++i) {
            WeylElement g = identity();
            for (std::size_t k = 0; k < orbit_.size(); ++k) {
                const Weight r = reflect(cartan_, i, orbit_[k]);
                g.perm[k] = static_cast<std::uint8_t>(std::find(orbit_.begin(), orbit_.end(), r) - orbit_.begin());
            }
            generators_.push_back(g);
        }
    }

    void build_elements() {
        // Breadth-first by word length, letters in increasing order: the first
        // word reaching an element is its lexicographically least reduced word.
        std::vector<WeylWord> frontier{WeylWord{}};
        info_.emplace(identity(), Info{});
        elements_.push_back(identity());
        while (!frontier.empty()) {
            std::vector<WeylWord> next;
            for (const auto& w : frontier)
                for (int i = 1; i <= 2; ++i) {
                    WeylWord cand = w;
                    cand.push_back(i);
                    WeylElement e = identity();
                    for (int letter : cand) e = multiply(e, generators_[static_cast<std::size_t>(letter - 1)]);
                    if (info_.count(e)) continue;
                    info_.emplace(e, Info{cand});
                    elements_.push_back(e);
                    next.push_back(cand);
                }
            std::sort(next.begin(), next.end());
            frontier = std::move(next);
        }
        std::stable_sort(elements_.begin(), elements_.end(), [&](const WeylElement& a, const WeylElement& b) {
            const auto& wa = info_.at(a).word;
            const auto& wb = info_.at(b).word;
            if (wa.size() != wb.size()) return wa.size() < wb.size();
            return wa < wb;
        });
    }

    CartanMatrix cartan_;
    std::vector<Weight> orbit_;
    std::vector<WeylElement> generators_;
    std::vector<WeylElement> elements_;
    std::map<WeylElement, Info> info_;
};

} // namespace g2cells

#endif // G2CELLS_WEYL_HPP
