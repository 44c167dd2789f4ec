#ifndef G2CELLS_WEIGHT_HPP
#define G2CELLS_WEIGHT_HPP

#include <array>
#include <compare>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace g2cells {

/// Rank-2 Cartan matrix A with <alpha_i^vee, alpha_j> = A(i, j). Indices are 1-based.
class CartanMatrix {
public:
    CartanMatrix(int a11, int a12, int a21, int a22) : a_{{{a11, a12}, {a21, a22}}} {
        if (a11 != 2 || a22 != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
        if (a12 > 0 || a21 > 0) throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
        if ((a12 == 0) != (a21 == 0)) throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
    }

    static const CartanMatrix& g2() {
        static const CartanMatrix a(2, -3, -1, 2);
        return a;
    }

    int operator()(int i, int j) const { return a_.at(i - 1).at(j - 1); }

    /// Index of a short simple root (the one whose coroot pairs most negatively).
    int short_index() const { return std::abs(a_[0][1]) >= std::abs(a_[1][0]) ? 1 : 2; }

    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
    std::array<std::array<int, 2>, 2> a_;
};

/*
 * Integral weight stored in the fundamental-weight basis: mu = c1*w1 + c2*w2,
 * so that <alpha_i^vee, mu> = c_i.
 *
 * For G2 the epsilon coordinates use w1 = e1, w2 = 2e1 + e2 with
 * e1 + e2 + e3 = 0. The normal form of the epsilon triple has third entry 0.
 */
struct Weight {
    int c1 = 0;
    int c2 = 0;

    static Weight fundamental(int i) { return i == 1 ? Weight{1, 0} : Weight{0, 1}; }

    int coroot_pairing(int i) const { return i == 1 ? c1 : c2; }

    friend Weight operator+(Weight a, Weight b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
    friend Weight operator-(Weight a, Weight b) { return {a.c1 - b.c1, a.c2 - b.c2}; }
    friend Weight operator-(Weight a) { return {-a.c1, -a.c2}; }
    friend Weight operator*(int k, Weight a) { return {k * a.c1, k * a.c2}; }
    friend auto operator<=>(const Weight&, const Weight&) = default;

    /// Normal-form epsilon triple (n1, n2, 0).
    std::array<int, 3> epsilon() const { return {c1 + 2 * c2, c2, 0}; }

    /// From an arbitrary epsilon triple (taken modulo (1,1,1)).
    static Weight from_epsilon(int n1, int n2, int n3) {
        n1 -= n3;
        n2 -= n3;
        return Weight{n1 - 2 * n2, n2};
    }

    /// Height <rho^vee, mu>. With w1 = 2a1 + a2 and w2 = 3a1 + 2a2 this is
    /// 3*c1 + 5*c2; every simple root has height 1.
    int height() const { return 3 * c1 + 5 * c2; }
};

/// Simple root alpha_j in fundamental-weight coordinates: (A_1j, A_2j).
inline Weight simple_root(const CartanMatrix& a, int j) { return Weight{a(1, j), a(2, j)}; }

/// s_i(mu) = mu - <alpha_i^vee, mu> alpha_i.
inline Weight reflect(const CartanMatrix& a, int i, Weight mu) {
    return mu - mu.coroot_pairing(i) * simple_root(a, i);
}

/*
 * G2 epsilon notation: +-e_i and e_i - e_j get their conventional names,
 * everything else is printed as an epsilon triple.
 */
inline std::string epsilon_name(Weight mu) {
    auto e = mu.epsilon();
    // Search a representative with entries in {-1,0,1} summing to 0 or a
    // single nonzero entry.
    for (int shift = -3; shift <= 3; ++shift) {
        int n[3] = {e[0] + shift, e[1] + shift, e[2] + shift};
        int nonzero = 0;
        bool small = true;
        for (int v : n) {
            if (v != 0) ++nonzero;
            if (v < -1 || v > 1) small = false;
        }
        if (!small) continue;
        if (nonzero == 0) return "0";
        if (nonzero == 1) {
            for (int k = 0; k < 3; ++k)
                if (n[k] != 0) return std::string(n[k] < 0 ? "-" : "") + "e" + std::to_string(k + 1);
        }
        if (nonzero == 2 && n[0] + n[1] + n[2] == 0) {
            int pos = -1, neg = -1;
            for (int k = 0; k < 3; ++k) {
                if (n[k] == 1) pos = k;
                if (n[k] == -1) neg = k;
            }
            return "e" + std::to_string(pos + 1) + "-e" + std::to_string(neg + 1);
        }
    }
    std::ostringstream os;
    os << "(" << e[0] << "," << e[1] << "," << e[2] << ")";
    return os.str();
}

/// Parses names like "e1", "-e3", "e3-e2", "-e1+e2"; inverse of epsilon_name
/// on the G2 chamber weights.
inline Weight parse_epsilon(const std::string& text) {
    int n[3] = {0, 0, 0};
    std::size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
        int s = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            s = text[pos] == '-' ? -1 : 1;
            ++pos;
        }
        if (pos >= text.size() || (text[pos] != 'e' && text[pos] != 'E'))
            throw std::invalid_argument("malformed epsilon weight '" + text + "'");
        ++pos;
        if (pos >= text.size() || text[pos] < '1' || text[pos] > '3')
            throw std::invalid_argument("malformed epsilon weight '" + text + "'");
        n[text[pos] - '1'] += s;
        ++pos;
        any = true;
    }
    if (!any) throw std::invalid_argument("empty epsilon weight");
    return Weight::from_epsilon(n[0], n[1], n[2]);
}

inline std::ostream& operator<<(std::ostream& os, Weight mu) { return os << epsilon_name(mu); }

} // namespace g2cells

#endif // G2CELLS_WEIGHT_HPP
