#ifndef G2CELLS_MINORS_HPP
#define G2CELLS_MINORS_HPP

#include "g2cells/rep.hpp"
#include "g2cells/weyl.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace g2cells {

/// Names the minor Delta^{w omega_level}.
struct ChamberWeight {
    WeylElement w;
    int level = 1;
    Weight weight;
};

inline ChamberWeight chamber_weight(const WeylElement& w, int level) {
    if (level != 1 && level != 2) throw std::invalid_argument("level must be 1 or 2");
    return ChamberWeight{w, level, WeylGroup::g2().act(w, Weight::fundamental(level))};
}

struct ExtremalVector {
    int level = 1;
    std::vector<Rational> coords;
    Weight weight;
};

namespace detail {

/// Divided powers along a word, rightmost letter applied first.
inline ExtremalVector extremal_along(int level, const WeylWord& word) {
    const Representation& rep = representations().level(level);
    ExtremalVector v;
    v.level = level;
    v.coords.assign(rep.dim, Rational(0));
    v.coords[0] = 1;
    v.weight = rep.highest_weight();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int j = *it;
        const int b = v.weight.coroot_pairing(j);
        if (b < 0) throw std::invalid_argument("extremal_along: word is not reduced for this weight");
        Rational fact = 1;
        for (int k = 1; k <= b; ++k) {
            v.coords = rep.f[static_cast<std::size_t>(j - 1)].apply(v.coords);
            fact *= k;
        }
        for (auto& c : v.coords) c /= fact;
        v.weight = reflect(CartanMatrix::g2(), j, v.weight);
    }
    for (const auto& c : v.coords)
        if (c.get_den() != 1) throw std::logic_error("extremal vector is not integral");
    return v;
}

} // namespace detail

/// v_{w omega_level}, built along the canonical reduced word of w; cached.
inline const ExtremalVector& extremal_vector(int level, const WeylElement& w) {
    static const std::map<std::pair<int, WeylElement>, ExtremalVector> cache = [] {
        std::map<std::pair<int, WeylElement>, ExtremalVector> m;
        const auto& W = WeylGroup::g2();
        for (int level : {1, 2})
            for (const auto& w : W.elements()) m.emplace(std::make_pair(level, w), detail::extremal_along(level, W.canonical_word(w)));
        return m;
    }();
    if (level != 1 && level != 2) throw std::invalid_argument("level must be 1 or 2");
    return cache.at({level, w});
}

inline const ExtremalVector& lowest_vector(int level) { return extremal_vector(level, WeylGroup::g2().longest()); }

/// The (w of minimal length, level) with w omega_level = mu.
inline ChamberWeight weight_to_chamber(Weight mu) {
    const auto& W = WeylGroup::g2();
    for (int level : {1, 2}) {
        std::vector<WeylElement> hits;
        int best = -1;
        for (const auto& w : W.elements()) {
            if (W.act(w, Weight::fundamental(level)) != mu) continue;
            const int l = W.length(w);
            if (best < 0 || l < best) {
                best = l;
                hits.assign(1, w);
            } else if (l == best) {
                hits.push_back(w);
            }
        }
        if (hits.size() > 1) throw std::logic_error("weight_to_chamber: minimal representative not unique");
        if (!hits.empty()) return ChamberWeight{hits.front(), level, mu};
    }
    throw std::invalid_argument("weight " + epsilon_name(mu) + " is not a chamber weight");
}

inline ChamberWeight weight_to_chamber(const std::string& epsilon) { return weight_to_chamber(parse_epsilon(epsilon)); }

namespace detail {
template <typename T>
T row_times(const Matrix<T>& m, std::size_t row, const std::vector<Rational>& v) {
    T s(0);
    for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c] != 0 && !(m(row, c) == T(0))) s += T(v[c]) * m(row, c);
    return s;
}
} // namespace detail

/// Delta^{w omega}(g): coefficient of v_omega in g . v_{w omega}.
template <typename T>
T minor(const GroupElement<T>& g, const ChamberWeight& cw) {
    const ExtremalVector& v = extremal_vector(cw.level, cw.w);
    return detail::row_times(g.matrix(cw.level), 0, v.coords);
}

/// Delta_-^{w omega}(g): coefficient of v_{-omega} := extremal_vector(level, w0) in g . v_{w omega}.
template <typename T>
T minor_lower(const GroupElement<T>& g, const ChamberWeight& cw) {
    const ExtremalVector& v = extremal_vector(cw.level, cw.w);
    const ExtremalVector& low = lowest_vector(cw.level);
    const std::size_t last = low.coords.size() - 1;
    for (std::size_t k = 0; k < last; ++k)
        if (low.coords[k] != 0) throw std::logic_error("lowest weight vector is not a basis line");
    return detail::row_times(g.matrix(cw.level), last, v.coords) / low.coords[last];
}

/// The 12 chamber weights of the symbolic minor table, level 1 then level 2.
inline const std::vector<std::string>& minor_table_labels() {
    static const std::vector<std::string> labels{"e1", "-e3", "-e2", "e2", "e3", "-e1",
                                                 "e1-e3", "e1-e2", "e2-e3", "e3-e2", "e2-e1", "e3-e1"};
    return labels;
}

} // namespace g2cells

#endif // G2CELLS_MINORS_HPP
