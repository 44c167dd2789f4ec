#ifndef G2CELLS_COMPONENTS_HPP
#define G2CELLS_COMPONENTS_HPP

#include "g2cells/chamber.hpp"
#include "g2cells/deodhar.hpp"
#include "g2cells/fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2cells {

enum class WordTag { I, ITilde };

inline const WeylWord& tag_word(WordTag t) { return t == WordTag::I ? word_i() : word_i_tilde(); }
inline WordTag other(WordTag t) { return t == WordTag::I ? WordTag::ITilde : WordTag::I; }

/// A cell D_word(h) of the codim-0 part, on the lower side.
struct SignNode {
    WordTag word;
    std::string signs;

    friend auto operator<=>(const SignNode&, const SignNode&) = default;
};

inline std::string node_name(const SignNode& n) { return (n.word == WordTag::I ? "i:" : "i~:") + n.signs; }

inline std::vector<std::string> all_sign_vectors(std::size_t n = 6) {
    std::vector<std::string> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::string s;
        for (std::size_t k = 0; k < n; ++k) s.push_back((mask >> (n - 1 - k)) & 1 ? '-' : '+');
        out.push_back(s);
    }
    return out;
}

/// Lower-unipotent factorization of y along `target`: epsilon of alpha of y.
inline Factorization refactor_lower(const Element& y, const WeylWord& target) {
    const Factorization up = alpha_factorize(y, target);
    return epsilon_factorize(up.product(), target);
}

class ResampleBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OverlapGraph {
    std::vector<SignNode> nodes;
    std::map<SignNode, std::size_t> index;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    std::map<SignNode, std::set<std::string>> neighbours; // observed partner signs per node
    int samples = 0;
    std::uint64_t seed = 0;

    std::size_t id(const SignNode& n) const { return index.at(n); }
};

/*
 * For every sign vector on either word, sample points of D_word(h), factor
 * them along the other word and join the two cells.
 */
inline OverlapGraph build_overlap_graph(int samples, std::uint64_t seed, int budget = 50) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    OverlapGraph g;
    g.samples = samples;
    g.seed = seed;
    for (WordTag t : {WordTag::I, WordTag::ITilde})
        for (const auto& s : all_sign_vectors()) {
            g.index.emplace(SignNode{t, s}, g.nodes.size());
            g.nodes.push_back(SignNode{t, s});
        }
    ParamSampler sampler(seed);
    for (const auto& node : std::vector<SignNode>(g.nodes)) {
        const WeylWord& from = tag_word(node.word);
        const WeylWord& to = tag_word(other(node.word));
        int failures = 0;
        for (int k = 0; k < samples;) {
            const Element y = product_y(from, sampler.signed_vector(node.signs));
            try {
                const Factorization f = refactor_lower(y, to);
                const SignNode partner{other(node.word), f.signs()};
                const std::size_t a = g.id(node), b = g.id(partner);
                g.edges.emplace(std::min(a, b), std::max(a, b));
                g.neighbours[node].insert(partner.signs);
                ++k;
            } catch (const NotFactorizable&) {
                if (++failures > budget) throw ResampleBudgetExceeded("resample budget exhausted for cell " + node_name(node));
            }
        }
    }
    return g;
}

/// Numbered components of the overlap graph.
struct Partition {
    std::vector<std::vector<SignNode>> components; // index k holds component number k+1
    std::map<SignNode, int> number;

    int component_of(const SignNode& n) const { return number.at(n); }
};

inline std::vector<std::vector<SignNode>> raw_components(const OverlapGraph& g) {
    std::vector<std::size_t> parent(g.nodes.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [a, b] : g.edges) parent[find(a)] = find(b);
    std::map<std::size_t, std::vector<SignNode>> groups;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) groups[find(v)].push_back(g.nodes[v]);
    std::vector<std::vector<SignNode>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

inline std::set<SignNode> fixture_members(const fixtures::OverlapComponent& c) {
    std::set<SignNode> s;
    for (const auto& [a, b] : c.rows) {
        s.insert(SignNode{WordTag::I, a});
        s.insert(SignNode{WordTag::ITilde, b});
    }
    return s;
}

class PartitionMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numbers the components by matching them to the reference grouping; throws with a diff otherwise.
inline Partition connected_components(const OverlapGraph& g) {
    const auto raw = raw_components(g);
    const auto& ref = fixtures::overlap_components();
    Partition p;
    p.components.resize(ref.size());
    std::ostringstream diff;
    std::vector<bool> used(ref.size(), false);
    for (const auto& comp : raw) {
        const std::set<SignNode> members(comp.begin(), comp.end());
        bool found = false;
        for (std::size_t k = 0; k < ref.size(); ++k)
            if (!used[k] && fixture_members(ref[k]) == members) {
                used[k] = true;
                found = true;
                p.components[k] = comp;
                for (const auto& n : comp) p.number[n] = ref[k].number;
            }
        if (!found) {
            diff << "unmatched component of size " << comp.size() << ":";
            for (const auto& n : comp) diff << " " << node_name(n);
            diff << "\n";
        }
    }
    for (std::size_t k = 0; k < ref.size(); ++k)
        if (!used[k]) diff << "reference component " << ref[k].number << " not reproduced\n";
    if (!diff.str().empty())
        throw PartitionMismatch("overlap partition has " + std::to_string(raw.size()) + " parts, expected " +
                                std::to_string(ref.size()) + "\n" + diff.str());
    return p;
}

struct OverlapResult {
    OverlapGraph graph;
    Partition partition;
};

/// Builds the graph, doubling the sample count (up to max_samples) while the partition is too fine.
inline OverlapResult compute_overlap(int samples = 8, std::uint64_t seed = 42, int max_samples = 64) {
    for (int n = samples;; n *= 2) {
        OverlapGraph g = build_overlap_graph(n, seed);
        const std::size_t parts = raw_components(g).size();
        if (parts > fixtures::overlap_components().size() && n * 2 <= max_samples) continue;
        Partition p = connected_components(g);
        return OverlapResult{std::move(g), std::move(p)};
    }
}

/// A component of the upper cell: the word-212121 column of one numbered component.
struct LetterGroup {
    char letter;
    int source_component;
    std::vector<std::string> signs;
};

inline std::vector<LetterGroup> letter_groups(const Partition& p) {
    std::vector<LetterGroup> out;
    for (std::size_t k = 0; k < p.components.size(); ++k) {
        std::set<std::string> col;
        for (const auto& n : p.components[k])
            if (n.word == WordTag::ITilde) col.insert(n.signs);
        std::optional<char> letter;
        for (const auto& lc : fixtures::letter_components())
            if (std::set<std::string>(lc.signs.begin(), lc.signs.end()) == col) letter = lc.letter;
        if (!letter) throw PartitionMismatch("column of component " + std::to_string(k + 1) + " matches no letter group");
        out.push_back(LetterGroup{*letter, static_cast<int>(k + 1), std::vector<std::string>(col.begin(), col.end())});
    }
    std::sort(out.begin(), out.end(), [](const LetterGroup& a, const LetterGroup& b) { return a.letter < b.letter; });
    return out;
}

inline const std::vector<int>& prime_schedule() {
    static const std::vector<int> primes{1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    return primes;
}

/// Component reached by epsilon from x_{212121} with the given signs and magnitudes.
inline int epsilon_component(const Partition& p, const std::string& signs, const std::vector<int>& magnitudes) {
    std::vector<Rational> params;
    for (std::size_t k = 0; k < 6; ++k) params.push_back(signs[k] == '-' ? -magnitudes[k] : magnitudes[k]);
    const Factorization f = epsilon_factorize(product_x(word_i_tilde(), params), word_i_tilde());
    return p.component_of(SignNode{WordTag::ITilde, f.signs()});
}

struct BijectionEntry {
    char letter;
    std::string representative;
    std::vector<int> magnitudes;
    int component;
};

/// Letter -> numbered component, using one sign representative per letter at magnitudes 1,2,3,5,7,11.
inline std::vector<BijectionEntry> match_plus_components(const Partition& p, const std::vector<LetterGroup>& groups) {
    std::vector<BijectionEntry> out;
    const auto& primes = prime_schedule();
    for (const auto& g : groups) {
        const std::string& rep = g.signs.front();
        for (std::size_t shift = 0;; ++shift) {
            if (shift + 6 > primes.size()) throw NotFactorizable("no factorizable test point for letter " + std::string(1, g.letter));
            const std::vector<int> mags(primes.begin() + static_cast<long>(shift), primes.begin() + static_cast<long>(shift + 6));
            try {
                out.push_back(BijectionEntry{g.letter, rep, mags, epsilon_component(p, rep, mags)});
                break;
            } catch (const NotFactorizable&) {
            }
        }
    }
    return out;
}

inline std::map<char, int> bijection_map(const std::vector<BijectionEntry>& b) {
    std::map<char, int> m;
    for (const auto& e : b) m[e.letter] = e.component;
    return m;
}

struct CellClassification {
    CellId cell;
    std::vector<Rational> params; // positional, at which the classification was made
    std::string x_signs;          // empty for cells read off the overlap graph
    char letter = '?';
    int component = 0;
};

/*
 * Classification context: the recomputed partition, the letter groups and
 * the letter -> number bijection.
 */
class Classifier {
public:
    Classifier(Partition partition, std::vector<LetterGroup> groups, std::map<char, int> bijection)
        : partition_(std::move(partition)), groups_(std::move(groups)), bijection_(std::move(bijection)) {
        for (const auto& g : groups_)
            for (const auto& s : g.signs) letter_of_.emplace(s, g.letter);
    }

    static Classifier compute(int samples = 8, std::uint64_t seed = 42) {
        OverlapResult r = compute_overlap(samples, seed);
        auto groups = letter_groups(r.partition);
        auto bij = bijection_map(match_plus_components(r.partition, groups));
        return Classifier(std::move(r.partition), std::move(groups), std::move(bij));
    }

    const Partition& partition() const { return partition_; }
    const std::vector<LetterGroup>& groups() const { return groups_; }
    const std::map<char, int>& bijection() const { return bijection_; }

    char letter_of(const std::string& x_signs) const { return letter_of_.at(x_signs); }

    /// Classification through alpha at the given positional parameters.
    CellClassification classify_at(const CellId& cell, const std::vector<Rational>& params) const {
        check_cell_params(cell, params);
        const Factorization f = alpha_factorize(family_point(*cell.family, params), word_i_tilde());
        CellClassification c{cell, params, f.signs(), '?', 0};
        c.letter = letter_of(c.x_signs);
        c.component = bijection_.at(c.letter);
        return c;
    }

    /// The standard test point: t = +-1, +-2, ... and m = the next primes; m moves on failure.
    CellClassification classify_cell(const CellId& cell) const {
        const CellFamily& fam = *cell.family;
        if (fam.codim == 0) {
            CellClassification c{cell, {}, "", '?', partition_.component_of(SignNode{WordTag::I, cell.h})};
            return c;
        }
        const auto& primes = prime_schedule();
        const std::size_t nt = static_cast<std::size_t>(fam.t_count());
        const std::size_t nm = static_cast<std::size_t>(fam.m_count());
        std::vector<Rational> t;
        for (std::size_t k = 0; k < nt; ++k) t.push_back(cell.h[k] == '-' ? -primes[k] : primes[k]);
        for (std::size_t start = nt; start + nm <= primes.size(); start += nm) {
            std::vector<Rational> m;
            for (std::size_t k = 0; k < nm; ++k) m.push_back(primes[start + k]);
            try {
                return classify_at(cell, interleave(fam, t, m));
            } catch (const NotFactorizable&) {
            }
        }
        throw NotFactorizable("no factorizable test point for cell " + cell.display());
    }

private:
    Partition partition_;
    std::vector<LetterGroup> groups_;
    std::map<char, int> bijection_;
    std::map<std::string, char> letter_of_;
};

struct ComponentCounts {
    int component = 0;
    int n0 = 0, n1 = 0, n2 = 0;
    int chi() const { return n0 - n1 + n2; }
};

struct ClassificationReport {
    std::vector<CellClassification> cells; // in all_cells() order
    std::vector<ComponentCounts> counts;   // components 1..11

    int total_chi() const {
        int s = 0;
        for (const auto& c : counts) s += c.chi();
        return s;
    }
};

inline ClassificationReport euler_report(const Classifier& cls) {
    ClassificationReport rep;
    const std::size_t ncomp = cls.partition().components.size();
    rep.counts.resize(ncomp);
    for (std::size_t k = 0; k < ncomp; ++k) rep.counts[k].component = static_cast<int>(k + 1);
    for (const auto& cell : all_cells()) {
        CellClassification c = cls.classify_cell(cell);
        auto& cnt = rep.counts.at(static_cast<std::size_t>(c.component - 1));
        switch (cell.codim()) {
        case 0: ++cnt.n0; break;
        case 1: ++cnt.n1; break;
        case 2: ++cnt.n2; break;
        default: throw std::logic_error("cell of codimension above 2");
        }
        rep.cells.push_back(std::move(c));
    }
    return rep;
}

/// Entries of the reference cell grouping that disagree with the reference overlap partition.
struct GroupingErratum {
    std::string cell;
    int listed;
    int corrected;
};

inline const std::vector<GroupingErratum>& component_cells_errata() {
    static const std::vector<GroupingErratum> errata{{"-+-+-+", 3, 4}, {"+-+-+-", 4, 3}};
    return errata;
}

/// Differences between the computed cell grouping and the reference, after applying the errata.
inline std::vector<std::string> compare_component_cells(const ClassificationReport& rep) {
    std::map<std::string, int> expected;
    const auto& ref = fixtures::component_cells();
    for (std::size_t k = 0; k < ref.size(); ++k)
        for (const auto& cell : ref[k]) expected[cell] = static_cast<int>(k + 1);
    for (const auto& e : component_cells_errata()) {
        if (expected.at(e.cell) != e.listed) throw std::logic_error("erratum does not apply to " + e.cell);
        expected[e.cell] = e.corrected;
    }
    std::vector<std::string> diff;
    std::set<std::string> seen;
    for (const auto& c : rep.cells) {
        const std::string d = c.cell.display();
        seen.insert(d);
        auto it = expected.find(d);
        if (it == expected.end()) diff.push_back(d + ": missing from reference");
        else if (it->second != c.component)
            diff.push_back(d + ": computed " + std::to_string(c.component) + ", reference " + std::to_string(it->second));
    }
    for (const auto& [cell, comp] : expected)
        if (!seen.count(cell)) diff.push_back(cell + ": not computed");
    return diff;
}

/// Differences between classify_cell and the seven reference tables.
inline std::vector<std::string> compare_tables(const Classifier& cls) {
    std::vector<std::string> diff;
    for (const auto& t : fixtures::classification_tables())
        for (const auto& r : t.rows) {
            const CellId cell = cell_from_display(r.cell);
            if (cell.family->name != t.family) diff.push_back(r.cell + ": not a cell of " + t.family);
            const CellClassification c = cls.classify_cell(cell);
            if (c.x_signs != r.x_signs || c.letter != r.letter || c.component != r.component)
                diff.push_back(t.family + " " + r.cell + ": computed " + c.x_signs + " " + c.letter + " " +
                               std::to_string(c.component) + ", reference " + r.x_signs + " " + r.letter + " " +
                               std::to_string(r.component));
        }
    return diff;
}

inline std::vector<std::string> compare_euler(const ClassificationReport& rep) {
    std::vector<std::string> diff;
    const auto& ref = fixtures::euler_table();
    if (ref.size() != rep.counts.size()) diff.push_back("component count differs");
    for (std::size_t k = 0; k < std::min(ref.size(), rep.counts.size()); ++k) {
        const auto& a = rep.counts[k];
        const auto& b = ref[k];
        if (a.n0 != b.n0 || a.n1 != b.n1 || a.n2 != b.n2 || a.chi() != b.chi)
            diff.push_back("component " + std::to_string(b.component) + ": computed (" + std::to_string(a.n0) + "," +
                           std::to_string(a.n1) + "," + std::to_string(a.n2) + ") chi " + std::to_string(a.chi()));
    }
    return diff;
}

/*
 * Per-family cell counts: for each codim-2 family two cells lie in 11 and the
 * other two in {5,6}, {7,8} or {9,10}; for each codim-1 family components
 * 5..10 get two cells each and 11 gets four.
 */
inline std::vector<std::string> check_cell_counts(const ClassificationReport& rep) {
    std::vector<std::string> diff;
    std::map<std::string, std::map<int, int>> per_family;
    for (const auto& c : rep.cells) ++per_family[c.cell.family->name][c.component];
    for (const auto& fam : cell_families()) {
        const auto& m = per_family[fam.name];
        auto count = [&](int k) { return m.count(k) ? m.at(k) : 0; };
        if (fam.codim == 2) {
            bool pair = false;
            for (int lo : {5, 7, 9})
                if (count(lo) == 1 && count(lo + 1) == 1) pair = true;
            if (count(11) != 2 || !pair) diff.push_back(fam.name + ": codim-2 cell counts differ");
        } else if (fam.codim == 1) {
            bool ok = count(11) == 4;
            for (int k = 5; k <= 10; ++k) ok = ok && count(k) == 2;
            if (!ok) diff.push_back(fam.name + ": codim-1 cell counts differ");
        }
    }
    return diff;
}

} // namespace g2cells

#endif // G2CELLS_COMPONENTS_HPP
