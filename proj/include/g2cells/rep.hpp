#ifndef G2CELLS_REP_HPP
#define G2CELLS_REP_HPP

#include "g2cells/matrix.hpp"
#include "g2cells/polynomial.hpp"
#include "g2cells/weight.hpp"
#include "g2cells/weyl.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace g2cells {

/*
 * A representation given by integer Chevalley matrices in a weight basis
 * ordered by decreasing height: e_i strictly upper, f_i strictly lower,
 * h_i diagonal. Basis vector 0 is the highest weight vector.
 */
struct Representation {
    std::string label;
    std::size_t dim = 0;
    std::array<RationalMatrix, 2> e, f, h;
    std::vector<Weight> weights;

    // exp_terms_*[i][k] = N^k / k! for N = e_i (resp. f_i), k = 0 .. nilpotency - 1.
    std::array<std::vector<RationalMatrix>, 2> exp_terms_e, exp_terms_f;
    std::array<RationalMatrix, 2> sdot, sdot_inv;

    int nilpotency_e(int i) const { return static_cast<int>(exp_terms_e.at(i - 1).size()); }
    int nilpotency_f(int i) const { return static_cast<int>(exp_terms_f.at(i - 1).size()); }
    Weight highest_weight() const { return weights.front(); }
};

struct Representations {
    Representation v7;
    Representation v14;

    const Representation& level(int i) const { return i == 1 ? v7 : v14; }
};

namespace detail {

inline std::vector<RationalMatrix> exp_terms(const RationalMatrix& n) {
    std::vector<RationalMatrix> terms{RationalMatrix::identity(n.rows())};
    RationalMatrix p = terms.front();
    for (int k = 1;; ++k) {
        p = Rational(1, k) * (p * n);
        if (p.is_zero()) break;
        terms.push_back(p);
        if (k > static_cast<int>(n.rows())) throw std::logic_error("generator is not nilpotent");
    }
    return terms;
}

inline RationalMatrix exp_at(const std::vector<RationalMatrix>& terms, const Rational& t) {
    RationalMatrix r = terms[0];
    Rational tk = 1;
    for (std::size_t k = 1; k < terms.size(); ++k) {
        tk *= t;
        r += tk * terms[k];
    }
    return r;
}

inline void finish(Representation& rep) {
    rep.dim = rep.e[0].rows();
    for (int i = 0; i < 2; ++i) {
        rep.h[i] = bracket(rep.e[i], rep.f[i]);
        rep.exp_terms_e[i] = exp_terms(rep.e[i]);
        rep.exp_terms_f[i] = exp_terms(rep.f[i]);
        const RationalMatrix x1 = exp_at(rep.exp_terms_e[i], 1);
        rep.sdot[i] = x1 * exp_at(rep.exp_terms_f[i], -1) * x1;
        const RationalMatrix xm = exp_at(rep.exp_terms_e[i], -1);
        rep.sdot_inv[i] = xm * exp_at(rep.exp_terms_f[i], 1) * xm;
    }
    rep.weights.clear();
    for (std::size_t k = 0; k < rep.dim; ++k) {
        const Rational a = rep.h[0](k, k), b = rep.h[1](k, k);
        if (a.get_den() != 1 || b.get_den() != 1) throw std::logic_error("non-integral weight");
        rep.weights.push_back(Weight{static_cast<int>(a.get_num().get_si()), static_cast<int>(b.get_num().get_si())});
    }
}

} // namespace detail

/*
 * V_w1: basis v0..v6 of weights e1, -e3, -e2, 0, e2, e3, -e1.
 * V_w2: the adjoint action on the Chevalley basis
 *   E_theta, E_{3a+b}, E_{2a+b}, E_{a+b}, e1, e2, h1, h2, f1, f2, F_{a+b}, ..., F_theta
 * of the Lie algebra spanned inside 7x7 matrices.
 */
inline Representations build_representations() {
    Representations reps;
    Representation& v = reps.v7;
    v.label = "V_w1";
    for (int i = 0; i < 2; ++i) {
        v.e[i] = RationalMatrix(7, 7);
        v.f[i] = RationalMatrix(7, 7);
    }
    struct Entry {
        int col, row, value;
    };
    const std::vector<Entry> f1{{0, 1, 1}, {2, 3, 1}, {3, 4, 2}, {5, 6, 1}};
    const std::vector<Entry> f2{{1, 2, 1}, {4, 5, 1}};
    const std::vector<Entry> e1{{1, 0, 1}, {3, 2, 2}, {4, 3, 1}, {6, 5, 1}};
    const std::vector<Entry> e2{{2, 1, 1}, {5, 4, 1}};
    for (const auto& x : f1) v.f[0](x.row, x.col) = x.value;
    for (const auto& x : f2) v.f[1](x.row, x.col) = x.value;
    for (const auto& x : e1) v.e[0](x.row, x.col) = x.value;
    for (const auto& x : e2) v.e[1](x.row, x.col) = x.value;
    detail::finish(v);

    const RationalMatrix& E1 = v.e[0];
    const RationalMatrix& E2 = v.e[1];
    const RationalMatrix& F1 = v.f[0];
    const RationalMatrix& F2 = v.f[1];
    const RationalMatrix eab = bracket(E1, E2);
    const RationalMatrix e2ab = Rational(1, 2) * bracket(E1, eab);
    const RationalMatrix e3ab = Rational(1, 3) * bracket(E1, e2ab);
    const RationalMatrix etheta = bracket(E2, e3ab);
    const RationalMatrix fab = bracket(F1, F2);
    const RationalMatrix f2ab = Rational(1, 2) * bracket(F1, fab);
    const RationalMatrix f3ab = Rational(1, 3) * bracket(F1, f2ab);
    const RationalMatrix ftheta = bracket(F2, f3ab);
    const std::vector<RationalMatrix> basis{etheta, e3ab, e2ab, eab, E1, E2, v.h[0], v.h[1],
                                            F1, F2, fab, f2ab, f3ab, ftheta};

    // Columns are the flattened basis matrices; ad(X) is read off by solving.
    RationalMatrix flat(49, 14);
    for (std::size_t k = 0; k < 14; ++k)
        for (std::size_t r = 0; r < 7; ++r)
            for (std::size_t c = 0; c < 7; ++c) flat(r * 7 + c, k) = basis[k](r, c);
    auto ad = [&](const RationalMatrix& x) {
        RationalMatrix m(14, 14);
        for (std::size_t k = 0; k < 14; ++k) {
            const RationalMatrix b = bracket(x, basis[k]);
            std::vector<Rational> rhs(49);
            for (std::size_t r = 0; r < 7; ++r)
                for (std::size_t c = 0; c < 7; ++c) rhs[r * 7 + c] = b(r, c);
            const auto coords = solve_exact(flat, rhs);
            if (!coords) throw std::logic_error("adjoint basis does not span the bracket");
            for (std::size_t r = 0; r < 14; ++r) m(r, k) = (*coords)[r];
        }
        return m;
    };
    Representation& a = reps.v14;
    a.label = "V_w2";
    for (int i = 0; i < 2; ++i) {
        a.e[i] = ad(v.e[i]);
        a.f[i] = ad(v.f[i]);
    }
    detail::finish(a);
    return reps;
}

inline const Representations& representations() {
    static const Representations reps = build_representations();
    return reps;
}

enum class FactorKind { X, Y, Sdot, SdotInv, Coweight };

template <typename T>
struct Factor {
    FactorKind kind;
    int index;
    T param;
};

template <typename T>
Matrix<T> lift(const RationalMatrix& m) {
    Matrix<T> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) out(r, c) = T(m(r, c));
    return out;
}

/// Group element carried in both representations, with the factor word that produced it.
template <typename T>
class GroupElement {
public:
    GroupElement() : m7_(Matrix<T>::identity(7)), m14_(Matrix<T>::identity(14)) {}

    static GroupElement identity() { return GroupElement(); }

    static GroupElement from_factor(const Factor<T>& f) {
        GroupElement g;
        g.m7_ = factor_matrix(representations().v7, f);
        g.m14_ = factor_matrix(representations().v14, f);
        g.provenance_.push_back(f);
        return g;
    }

    static GroupElement regenerate(const std::vector<Factor<T>>& word) {
        GroupElement g;
        for (const auto& f : word) g = g * from_factor(f);
        return g;
    }

    const Matrix<T>& m7() const { return m7_; }
    const Matrix<T>& m14() const { return m14_; }
    const Matrix<T>& matrix(int level) const { return level == 1 ? m7_ : m14_; }
    const std::vector<Factor<T>>& provenance() const { return provenance_; }

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
        GroupElement g;
        g.m7_ = a.m7_ * b.m7_;
        g.m14_ = a.m14_ * b.m14_;
        g.provenance_ = a.provenance_;
        g.provenance_.insert(g.provenance_.end(), b.provenance_.begin(), b.provenance_.end());
        return g;
    }

    /// Same matrices; provenance is ignored.
    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m7_ == b.m7_ && a.m14_ == b.m14_; }

    /// Inverse built from the reversed, inverted factor word.
    GroupElement inverse() const {
        std::vector<Factor<T>> inv;
        for (auto it = provenance_.rbegin(); it != provenance_.rend(); ++it) {
            Factor<T> f = *it;
            switch (f.kind) {
            case FactorKind::X:
            case FactorKind::Y: f.param = -f.param; break;
            case FactorKind::Sdot: f.kind = FactorKind::SdotInv; break;
            case FactorKind::SdotInv: f.kind = FactorKind::Sdot; break;
            case FactorKind::Coweight:
                if constexpr (std::is_same_v<T, Rational>) f.param = 1 / f.param;
                else throw std::invalid_argument("inverse of a symbolic torus factor");
                break;
            }
            inv.push_back(f);
        }
        return regenerate(inv);
    }

    bool matches_provenance() const { return regenerate(provenance_) == *this; }

private:
    static Matrix<T> exp_series(const std::vector<RationalMatrix>& terms, const T& t) {
        Matrix<T> r = lift<T>(terms[0]);
        T tk(1);
        for (std::size_t k = 1; k < terms.size(); ++k) {
            tk = tk * t;
            r += tk * lift<T>(terms[k]);
        }
        return r;
    }

    static Matrix<T> factor_matrix(const Representation& rep, const Factor<T>& f) {
        if (f.index != 1 && f.index != 2) throw std::invalid_argument("generator index must be 1 or 2");
        const auto i = static_cast<std::size_t>(f.index - 1);
        switch (f.kind) {
        case FactorKind::X: return exp_series(rep.exp_terms_e[i], f.param);
        case FactorKind::Y: return exp_series(rep.exp_terms_f[i], f.param);
        case FactorKind::Sdot: return lift<T>(rep.sdot[i]);
        case FactorKind::SdotInv: return lift<T>(rep.sdot_inv[i]);
        case FactorKind::Coweight: {
            if constexpr (std::is_same_v<T, Rational>) {
                if (f.param == 0) throw std::invalid_argument("coweight parameter must be nonzero");
                Matrix<T> m(rep.dim, rep.dim);
                for (std::size_t k = 0; k < rep.dim; ++k) {
                    const int n = rep.weights[k].coroot_pairing(f.index);
                    Rational v = 1;
                    for (int j = 0; j < std::abs(n); ++j) v *= f.param;
                    m(k, k) = n >= 0 ? v : 1 / v;
                }
                return m;
            } else {
                throw std::invalid_argument("torus factors need a rational parameter");
            }
        }
        }
        throw std::logic_error("unknown factor kind");
    }

    Matrix<T> m7_;
    Matrix<T> m14_;
    std::vector<Factor<T>> provenance_;
};

using Element = GroupElement<Rational>;
using SymbolicElement = GroupElement<Polynomial>;

template <typename T = Rational>
GroupElement<T> x(int i, const T& t) { return GroupElement<T>::from_factor({FactorKind::X, i, t}); }
template <typename T = Rational>
GroupElement<T> y(int i, const T& t) { return GroupElement<T>::from_factor({FactorKind::Y, i, t}); }
template <typename T = Rational>
GroupElement<T> sdot(int i) { return GroupElement<T>::from_factor({FactorKind::Sdot, i, T(0)}); }
template <typename T = Rational>
GroupElement<T> sdot_inv(int i) { return GroupElement<T>::from_factor({FactorKind::SdotInv, i, T(0)}); }

/// alpha_i^vee(t): t^{<alpha_i^vee, mu>} on the weight-mu line.
inline Element coweight(int i, const Rational& t) { return Element::from_factor({FactorKind::Coweight, i, t}); }

/// Product of sdot along the canonical reduced word of w.
template <typename T = Rational>
GroupElement<T> wdot(const WeylElement& w) {
    GroupElement<T> g;
    for (int i : WeylGroup::g2().canonical_word(w)) g = g * sdot<T>(i);
    return g;
}

template <typename T = Rational>
GroupElement<T> wdot_word(const WeylWord& word) {
    GroupElement<T> g;
    for (int i : word) g = g * sdot<T>(i);
    return g;
}

template <typename T>
GroupElement<T> product_x(const WeylWord& word, const std::vector<T>& params) {
    if (word.size() != params.size()) throw std::invalid_argument("product_x: word and parameter lengths differ");
    GroupElement<T> g;
    for (std::size_t k = 0; k < word.size(); ++k) g = g * x<T>(word[k], params[k]);
    return g;
}

template <typename T>
GroupElement<T> product_y(const WeylWord& word, const std::vector<T>& params) {
    if (word.size() != params.size()) throw std::invalid_argument("product_y: word and parameter lengths differ");
    GroupElement<T> g;
    for (std::size_t k = 0; k < word.size(); ++k) g = g * y<T>(word[k], params[k]);
    return g;
}

namespace detail {
template <typename T>
bool consistent(bool a7, bool a14) {
    if (a7 != a14) throw std::logic_error("triangularity differs between V_w1 and V_w2");
    return a7;
}
} // namespace detail

template <typename T>
bool is_upper(const GroupElement<T>& g) {
    return detail::consistent<T>(g.m7().is_upper_triangular(), g.m14().is_upper_triangular());
}
template <typename T>
bool is_lower(const GroupElement<T>& g) {
    return detail::consistent<T>(g.m7().is_lower_triangular(), g.m14().is_lower_triangular());
}
template <typename T>
bool is_unipotent_upper(const GroupElement<T>& g) {
    return detail::consistent<T>(g.m7().is_upper_triangular() && g.m7().has_unit_diagonal(),
                                 g.m14().is_upper_triangular() && g.m14().has_unit_diagonal());
}
template <typename T>
bool is_unipotent_lower(const GroupElement<T>& g) {
    return detail::consistent<T>(g.m7().is_lower_triangular() && g.m7().has_unit_diagonal(),
                                 g.m14().is_lower_triangular() && g.m14().has_unit_diagonal());
}

} // namespace g2cells

#endif // G2CELLS_REP_HPP
