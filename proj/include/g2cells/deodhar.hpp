#ifndef G2CELLS_DEODHAR_HPP
#define G2CELLS_DEODHAR_HPP

#include "g2cells/rep.hpp"
#include "g2cells/weyl.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2cells {

struct CellFamily {
    Subexpression sigma;
    std::string name;
    int dim = 0;
    int codim = 0;

    std::size_t size() const { return sigma.steps.size(); }
    StepKind step(std::size_t pos) const { return sigma.steps.at(pos); }
    int t_count() const { return static_cast<int>(sigma.I().size()); }
    int m_count() const { return static_cast<int>(sigma.K().size()); }
};

/// The distinguished subexpressions of (1,2,1,2,1,2), in enumeration order.
inline const std::vector<CellFamily>& cell_families() {
    static const std::vector<CellFamily> fams = [] {
        std::vector<CellFamily> out;
        for (auto& s : WeylGroup::g2().enumerate_distinguished(word_i())) {
            CellFamily f;
            f.name = s.name();
            f.dim = static_cast<int>(s.I().size() + s.K().size());
            f.codim = static_cast<int>(s.J().size());
            f.sigma = std::move(s);
            out.push_back(std::move(f));
        }
        return out;
    }();
    return fams;
}

inline const CellFamily& cell_family(const std::string& name) {
    for (const auto& f : cell_families())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown cell family '" + name + "'");
}

/// A family together with a sign for each I-position.
struct CellId {
    const CellFamily* family = nullptr;
    std::string h; // '+'/'-' per I-position, in order

    /// '+'/'-' at I, '0' at J, '*' at K.
    std::string display() const {
        std::string s;
        std::size_t k = 0;
        for (auto step : family->sigma.steps) {
            if (step == StepKind::Stay) s.push_back(h.at(k++));
            else s.push_back(step == StepKind::Up ? '0' : '*');
        }
        return s;
    }
    int codim() const { return family->codim; }
    friend bool operator<(const CellId& a, const CellId& b) {
        return a.family->name != b.family->name ? a.family->name < b.family->name : a.h < b.h;
    }
};

inline CellId make_cell(const std::string& family, const std::string& h) {
    const CellFamily& f = cell_family(family);
    if (static_cast<int>(h.size()) != f.t_count()) throw std::invalid_argument("cell " + family + " needs " + std::to_string(f.t_count()) + " signs");
    for (char c : h)
        if (c != '+' && c != '-') throw std::invalid_argument("signs must be '+' or '-'");
    return CellId{&f, h};
}

/// Inverse of CellId::display.
inline CellId cell_from_display(const std::string& display) {
    const WeylWord& word = word_i();
    if (display.size() != word.size()) throw std::invalid_argument("cell display '" + display + "' must have length 6");
    std::string name, h;
    for (std::size_t k = 0; k < display.size(); ++k) {
        const char c = display[k];
        if (c == '+' || c == '-') {
            name.push_back('x');
            h.push_back(c);
        } else if (c == '0' || c == '*') {
            name.push_back(static_cast<char>('0' + word[k]));
        } else {
            throw std::invalid_argument("bad cell display '" + display + "'");
        }
    }
    CellId cell = make_cell(name, h);
    if (cell.display() != display) throw std::invalid_argument("cell display '" + display + "' has inconsistent 0/* marks");
    return cell;
}

/// All cells of all families: 2^{|I|} sign choices each.
inline std::vector<CellId> all_cells() {
    std::vector<CellId> out;
    for (const auto& f : cell_families()) {
        const int n = f.t_count();
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::string h;
            for (int k = 0; k < n; ++k) h.push_back((mask >> (n - 1 - k)) & 1 ? '-' : '+');
            out.push_back(CellId{&f, h});
        }
    }
    return out;
}

/// Factors z_1 .. z_N at positional parameters (t's at I, m's at K, in position order).
inline std::vector<Element> family_factors(const CellFamily& fam, const std::vector<Rational>& params) {
    if (static_cast<int>(params.size()) != fam.t_count() + fam.m_count())
        throw std::invalid_argument("family " + fam.name + " takes " + std::to_string(fam.t_count() + fam.m_count()) + " parameters");
    std::vector<Element> z;
    std::size_t next = 0;
    for (std::size_t j = 0; j < fam.size(); ++j) {
        const int i = fam.sigma.word[j];
        switch (fam.step(j)) {
        case StepKind::Stay: {
            const Rational& t = params[next++];
            if (t == 0) throw std::invalid_argument("family " + fam.name + ": t parameters must be nonzero");
            z.push_back(y(i, t));
            break;
        }
        case StepKind::Up: z.push_back(sdot(i)); break;
        case StepKind::Down: z.push_back(x(i, params[next++]) * sdot_inv(i)); break;
        }
    }
    return z;
}

inline Element family_point(const CellFamily& fam, const std::vector<Rational>& params) {
    Element g;
    for (const auto& z : family_factors(fam, params)) g = g * z;
    return g;
}

/// Positional parameters from the t's (I-positions) and m's (K-positions).
inline std::vector<Rational> interleave(const CellFamily& fam, const std::vector<Rational>& t, const std::vector<Rational>& m) {
    if (static_cast<int>(t.size()) != fam.t_count() || static_cast<int>(m.size()) != fam.m_count())
        throw std::invalid_argument("family " + fam.name + " takes " + std::to_string(fam.t_count()) + " t's and " +
                                    std::to_string(fam.m_count()) + " m's");
    std::vector<Rational> out;
    std::size_t ti = 0, mi = 0;
    for (auto step : fam.sigma.steps) {
        if (step == StepKind::Stay) out.push_back(t[ti++]);
        else if (step == StepKind::Down) out.push_back(m[mi++]);
    }
    return out;
}

/// Checks the sign pattern of the t's against the cell.
inline void check_cell_params(const CellId& cell, const std::vector<Rational>& params) {
    std::size_t ti = 0, next = 0;
    for (auto step : cell.family->sigma.steps) {
        if (step == StepKind::Up) continue;
        if (next >= params.size()) throw std::invalid_argument("too few parameters for cell " + cell.display());
        const Rational& v = params[next++];
        if (step != StepKind::Stay) continue;
        const int want = cell.h.at(ti++) == '+' ? 1 : -1;
        if (sgn(v) != want) throw std::invalid_argument("parameter " + v.get_str() + " violates the sign of cell " + cell.display());
    }
    if (next != params.size()) throw std::invalid_argument("too many parameters for cell " + cell.display());
}

inline Element cell_point(const CellId& cell, const std::vector<Rational>& t, const std::vector<Rational>& m) {
    const auto params = interleave(*cell.family, t, m);
    check_cell_params(cell, params);
    return family_point(*cell.family, params);
}

namespace detail {

inline Matrix<int> support_pattern(const RationalMatrix& m) {
    Matrix<int> p(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) p(r, c) = m(r, c) != 0 ? 1 : 0;
    return p;
}

inline WeylElement pattern_to_weyl(const Matrix<int>& p) {
    static const std::vector<std::pair<Matrix<int>, WeylElement>> table = [] {
        std::vector<std::pair<Matrix<int>, WeylElement>> t;
        for (const auto& w : WeylGroup::g2().elements()) t.emplace_back(support_pattern(wdot(w).m7()), w);
        return t;
    }();
    for (const auto& [pat, w] : table)
        if (pat == p) return w;
    throw std::logic_error("rank profile permutation is not a Weyl group element");
}

inline RationalMatrix reverse_rows(const RationalMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) r(i, c) = m(m.rows() - 1 - i, c);
    return r;
}

inline Matrix<int> reverse_rows(const Matrix<int>& m) {
    Matrix<int> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) r(i, c) = m(m.rows() - 1 - i, c);
    return r;
}

} // namespace detail

/// The w with g in B^- wdot B^+.
inline WeylElement bruhat_position_mixed(const Element& g) {
    return detail::pattern_to_weyl(rank_profile_permutation(g.m7()));
}

/// The w with g in B^+ wdot B^+ (rows reversed, so the upper left factor becomes lower).
inline WeylElement bruhat_position_plus(const Element& g) {
    const Matrix<int> p = rank_profile_permutation(detail::reverse_rows(g.m7()));
    return detail::pattern_to_weyl(detail::reverse_rows(p));
}

/// Relative position of (B^-, g.B^+), which is w0 times the mixed position.
inline WeylElement relative_position_to_opposite(const Element& g) {
    const auto& W = WeylGroup::g2();
    return W.multiply(W.longest(), bruhat_position_mixed(g));
}

struct ChainReport {
    std::vector<WeylElement> positions; // relative positions of (B^-, z_1..z_j . B^+), j = 0..N
    bool chain_ok = true;
    bool prefixes_in_cosets = true;    // (z_1..z_j) sigma_j-dot^{-1} unipotent lower
    bool ok() const { return chain_ok && prefixes_in_cosets; }
};

inline ChainReport cell_chain(const CellFamily& fam, const std::vector<Rational>& params) {
    const auto& W = WeylGroup::g2();
    const auto z = family_factors(fam, params);
    ChainReport rep;
    Element prefix;
    for (std::size_t j = 0; j <= z.size(); ++j) {
        if (j > 0) prefix = prefix * z[j - 1];
        const WeylElement& sigma = fam.sigma.sigma[j];
        const WeylElement pos = relative_position_to_opposite(prefix);
        rep.positions.push_back(pos);
        if (pos != W.multiply(W.longest(), sigma)) rep.chain_ok = false;
        if (!is_unipotent_lower(prefix * wdot(sigma).inverse())) rep.prefixes_in_cosets = false;
    }
    return rep;
}

/// Relative position of (B^-, z_1..z_j . B^+) equals w0 sigma_j for every prefix.
inline bool verify_cell_chain(const CellId& cell, const std::vector<Rational>& t, const std::vector<Rational>& m) {
    const auto params = interleave(*cell.family, t, m);
    check_cell_params(cell, params);
    return cell_chain(*cell.family, params).ok();
}

/// Rationals +-p/q with p, q primes <= 97.
class ParamSampler {
public:
    explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

    Rational magnitude() {
        static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                     53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
        std::uniform_int_distribution<int> pick(0, 24);
        Rational q(primes[pick(rng_)], primes[pick(rng_)]);
        q.canonicalize();
        return q;
    }
    Rational with_sign(char s) { return s == '-' ? Rational(-magnitude()) : magnitude(); }
    Rational any() { return coin() ? magnitude() : Rational(-magnitude()); }
    bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

    std::vector<Rational> signed_vector(const std::string& signs) {
        std::vector<Rational> out;
        for (char s : signs) out.push_back(with_sign(s));
        return out;
    }
    std::vector<Rational> any_vector(std::size_t n) {
        std::vector<Rational> out;
        for (std::size_t k = 0; k < n; ++k) out.push_back(any());
        return out;
    }

    /// Valid positional parameters for a cell.
    std::vector<Rational> cell_params(const CellId& cell) {
        return interleave(*cell.family, signed_vector(cell.h), any_vector(static_cast<std::size_t>(cell.family->m_count())));
    }

private:
    std::mt19937_64 rng_;
};

} // namespace g2cells

#endif // G2CELLS_DEODHAR_HPP
