#ifndef G2CELLS_ACCEPTANCE_HPP
#define G2CELLS_ACCEPTANCE_HPP

#include "g2cells/g2cells.hpp"

#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace g2cells {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::vector<std::string> problems;

    std::string line() const {
        std::string s = std::string(passed ? "PASS" : "FAIL") + " [" + std::to_string(id) + "] " + name;
        if (!passed && !problems.empty()) s += ": " + problems.front() + (problems.size() > 1 ? " (+" + std::to_string(problems.size() - 1) + " more)" : "");
        return s;
    }
};

inline CheckResult make_result(int id, std::string name, std::vector<std::string> problems) {
    CheckResult r{id, std::move(name), problems.empty(), std::move(problems)};
    return r;
}

inline std::vector<std::string> check_distinguished() {
    std::vector<std::string> problems;
    const auto& W = WeylGroup::g2();
    std::set<std::pair<std::string, std::vector<std::string>>> got, want;
    for (const auto& s : W.enumerate_distinguished(word_i())) {
        std::vector<std::string> chain;
        for (const auto& e : s.sigma) chain.push_back(W.name(e));
        got.emplace(s.name(), chain);
        if (s.J().size() != s.K().size()) problems.push_back(s.name() + ": |J| != |K|");
    }
    for (const auto& r : fixtures::distinguished_121212()) want.emplace(r.name, r.chain);
    for (const auto& g : got)
        if (!want.count(g)) problems.push_back("unexpected subexpression " + g.first);
    for (const auto& w : want)
        if (!got.count(w)) problems.push_back("missing subexpression " + w.first);
    return problems;
}

inline RationalMatrix ad_power(const RationalMatrix& x, const RationalMatrix& y, int k) {
    RationalMatrix r = y;
    for (int i = 0; i < k; ++i) r = bracket(x, r);
    return r;
}

inline std::vector<std::string> representation_violations(const Representation& rep) {
    std::vector<std::string> problems;
    const auto& A = CartanMatrix::g2();
    const RationalMatrix zero(rep.dim, rep.dim);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const auto ui = static_cast<std::size_t>(i - 1), uj = static_cast<std::size_t>(j - 1);
            const std::string tag = rep.label + " (" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (bracket(rep.e[ui], rep.f[uj]) != (i == j ? rep.h[ui] : zero)) problems.push_back(tag + ": [e_i,f_j]");
            if (bracket(rep.h[ui], rep.e[uj]) != Rational(A(i, j)) * rep.e[uj]) problems.push_back(tag + ": [h_i,e_j]");
            if (bracket(rep.h[ui], rep.f[uj]) != Rational(-A(i, j)) * rep.f[uj]) problems.push_back(tag + ": [h_i,f_j]");
        }
    if (bracket(rep.h[0], rep.h[1]) != zero) problems.push_back(rep.label + ": [h1,h2]");
    if (!ad_power(rep.e[0], rep.e[1], 4).is_zero()) problems.push_back(rep.label + ": (ad e1)^4 e2");
    if (!ad_power(rep.e[1], rep.e[0], 2).is_zero()) problems.push_back(rep.label + ": (ad e2)^2 e1");
    if (!ad_power(rep.f[0], rep.f[1], 4).is_zero()) problems.push_back(rep.label + ": (ad f1)^4 f2");
    if (!ad_power(rep.f[1], rep.f[0], 2).is_zero()) problems.push_back(rep.label + ": (ad f2)^2 f1");
    for (int i = 0; i < 2; ++i) {
        if (!rep.e[i].is_strictly_upper()) problems.push_back(rep.label + ": e not strictly upper");
        if (!rep.f[i].is_strictly_lower()) problems.push_back(rep.label + ": f not strictly lower");
    }
    for (std::size_t k = 0; k + 1 < rep.dim; ++k)
        if (rep.weights[k].height() < rep.weights[k + 1].height()) problems.push_back(rep.label + ": basis not ordered by height");
    return problems;
}

inline std::vector<std::string> check_representations(int random_points = 20, std::uint64_t seed = 42) {
    std::vector<std::string> problems;
    const auto& reps = representations();
    for (const Representation* rep : {&reps.v7, &reps.v14})
        for (auto& p : representation_violations(*rep)) problems.push_back(p);
    if (wdot_word(word_i()) != wdot_word(word_i_tilde())) problems.push_back("braid identity fails");
    ParamSampler s(seed);
    for (int k = 0; k < random_points; ++k) {
        const Rational t = s.any();
        for (int i = 1; i <= 2; ++i) {
            const Rational ti = 1 / t;
            const std::string tag = " for i=" + std::to_string(i) + " t=" + t.get_str();
            if (x(i, t) != y(i, ti) * coweight(i, -t) * sdot_inv(i) * y(i, ti)) problems.push_back("x_i(t) factorization fails" + tag);
            if (y(i, t) != x(i, ti) * sdot(i) * coweight(i, -t) * x(i, ti)) problems.push_back("y_i(t) factorization fails" + tag);
            // with sdot and coweight swapped the identity fails; if it ever holds this check is stale
            if (x(i, t) == y(i, ti) * sdot(i) * coweight(i, -t) * y(i, ti)) problems.push_back("swapped x_i(t) factor order unexpectedly holds" + tag);
        }
    }
    return problems;
}

inline std::vector<std::string> check_symbolic_minors() {
    std::vector<std::string> problems;
    const std::vector<std::string> names{"a", "b", "c", "d", "e", "f"};
    std::vector<Polynomial> vars;
    for (std::size_t k = 0; k < 6; ++k) vars.push_back(Polynomial::variable(k));
    const SymbolicElement g = product_x<Polynomial>(word_i_tilde(), vars);
    for (const auto& [label, text] : fixtures::symbolic_minors()) {
        const Polynomial want = Polynomial::parse(text, names);
        const Polynomial got = minor(g, weight_to_chamber(label));
        if (got != want || got.to_string(names) != want.to_string(names))
            problems.push_back(label + ": computed " + got.to_string(names));
    }
    return problems;
}

/// Minor-formula factorizations against closed forms, plus round trips, at `points` random points per family.
inline std::vector<std::string> check_chamber_ansatz(int points = 100, std::uint64_t seed = 42) {
    std::vector<std::string> problems;
    ParamSampler s(seed);
    const WeylWord& w = word_i_tilde();
    int good = 0, attempts = 0;
    while (good < points && attempts < 20 * points) {
        ++attempts;
        const auto p = s.any_vector(6);
        const Element xg = product_x(w, p);
        std::optional<Factorization> eps;
        std::optional<std::vector<Quotient>> closed;
        try {
            eps = epsilon_factorize(xg, w);
        } catch (const NotFactorizable&) {
        }
        try {
            closed = closed_form_epsilon(p);
        } catch (const NotFactorizable&) {
        }
        if (!eps || !closed) continue;
        ++good;
        if (!same_values(*closed, eps->params)) problems.push_back("epsilon closed form differs");
        const Element yg = eps->product();
        if (!flag_equal_opposed(xg, yg)) problems.push_back("epsilon flag identity fails");
        if (alpha_factorize(yg, w).product() != xg) problems.push_back("alpha(epsilon(x)) != x");
    }
    if (good < points) problems.push_back("epsilon: only " + std::to_string(good) + " factorizable points");
    for (const auto& fam : closed_form_families()) {
        const CellFamily& f = cell_family(fam);
        good = 0;
        attempts = 0;
        while (good < points && attempts < 20 * points) {
            ++attempts;
            const auto p = s.any_vector(static_cast<std::size_t>(f.t_count() + f.m_count()));
            const Element yg = family_point(f, p);
            std::optional<Factorization> al;
            std::optional<std::vector<Quotient>> closed;
            try {
                al = alpha_factorize(yg, w);
            } catch (const NotFactorizable&) {
            }
            try {
                closed = closed_form_alpha(fam, p);
            } catch (const NotFactorizable&) {
            }
            if (!al || !closed) continue;
            ++good;
            if (!same_values(*closed, al->params)) problems.push_back(fam + ": alpha closed form differs");
            const Element xg = al->product();
            if (!flag_equal_opposed(xg, yg)) problems.push_back(fam + ": alpha flag identity fails");
            if (epsilon_factorize(xg, w).product() != yg) problems.push_back(fam + ": epsilon(alpha(y)) != y");
        }
        if (good < points) problems.push_back(fam + ": only " + std::to_string(good) + " factorizable points");
    }
    return problems;
}

inline std::vector<std::string> check_overlap_sizes(const Partition& p) {
    std::vector<std::string> problems;
    const std::vector<std::size_t> want{2, 2, 2, 2, 16, 16, 16, 16, 16, 16, 24};
    if (p.components.size() != want.size()) problems.push_back("expected 11 components");
    std::size_t total = 0;
    for (std::size_t k = 0; k < p.components.size(); ++k) {
        total += p.components[k].size();
        if (k < want.size() && p.components[k].size() != want[k])
            problems.push_back("component " + std::to_string(k + 1) + " has " + std::to_string(p.components[k].size()) + " nodes");
    }
    if (total != 128) problems.push_back("node count " + std::to_string(total));
    return problems;
}

inline std::vector<std::string> check_bijection(const std::map<char, int>& got) {
    std::vector<std::string> problems;
    if (got != fixtures::letter_bijection()) {
        std::string s;
        for (const auto& [l, n] : got) s += std::string(1, l) + std::to_string(n) + " ";
        problems.push_back("computed " + s);
    }
    return problems;
}

/// Same component from `resamples` random valid points per cell (m may be negative or zero).
inline std::vector<std::string> check_point_independence(const Classifier& cls, int resamples = 10, std::uint64_t seed = 42) {
    std::vector<std::string> problems;
    ParamSampler s(seed);
    for (const auto& cell : all_cells()) {
        const int expected = cls.classify_cell(cell).component;
        int good = 0, attempts = 0;
        while (good < resamples && attempts < 50 * resamples) {
            ++attempts;
            std::vector<Rational> m;
            for (int k = 0; k < cell.family->m_count(); ++k) m.push_back(s.coin() && s.coin() ? Rational(0) : s.any());
            const auto params = interleave(*cell.family, s.signed_vector(cell.h), m);
            try {
                if (cls.classify_at(cell, params).component != expected)
                    problems.push_back(cell.display() + ": label depends on the point");
                ++good;
            } catch (const NotFactorizable&) {
            }
        }
        if (good < resamples) problems.push_back(cell.display() + ": too few factorizable points");
    }
    return problems;
}

inline std::vector<std::string> check_cell_chains(int points = 50, std::uint64_t seed = 42) {
    std::vector<std::string> problems;
    const auto& W = WeylGroup::g2();
    ParamSampler s(seed);
    for (const auto& f : cell_families())
        for (int k = 0; k < points; ++k) {
            std::string h;
            for (int j = 0; j < f.t_count(); ++j) h.push_back(s.coin() ? '+' : '-');
            const CellId cell{&f, h};
            const auto params = s.cell_params(cell);
            const Element g = family_point(f, params);
            if (!is_unipotent_lower(g)) problems.push_back(cell.display() + ": point not unipotent lower");
            if (bruhat_position_plus(g) != W.longest()) problems.push_back(cell.display() + ": point not in the big cell");
            if (!cell_chain(f, params).ok()) problems.push_back(cell.display() + ": relative position chain fails");
        }
    return problems;
}

/// Everything the acceptance criteria ask for, computed once.
struct AcceptanceRun {
    std::vector<CheckResult> results;
    bool all_passed() const {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }
};

inline AcceptanceRun run_acceptance(int samples = 8, std::uint64_t seed = 42) {
    AcceptanceRun run;
    auto guarded = [&](int id, const std::string& name, const std::function<std::vector<std::string>()>& f) {
        try {
            run.results.push_back(make_result(id, name, f()));
        } catch (const std::exception& e) {
            run.results.push_back(make_result(id, name, {std::string("exception: ") + e.what()}));
        }
    };
    guarded(1, "distinguished subexpressions of 121212", [] { return check_distinguished(); });
    guarded(2, "representation relations and identities (rank-one identities in corrected factor order)", [&] { return check_representations(20, seed); });
    guarded(3, "symbolic minors of x_212121", [] { return check_symbolic_minors(); });
    guarded(4, "chamber ansatz against closed forms and round trips", [&] { return check_chamber_ansatz(100, seed); });

    std::optional<Classifier> cls;
    std::optional<std::vector<BijectionEntry>> bij;
    guarded(5, "overlap graph partition", [&] {
        OverlapResult r = compute_overlap(samples, seed);
        auto problems = check_overlap_sizes(r.partition);
        auto groups = letter_groups(r.partition);
        bij = match_plus_components(r.partition, groups);
        cls.emplace(std::move(r.partition), std::move(groups), bijection_map(*bij));
        return problems;
    });
    auto need = [&]() -> const Classifier& {
        if (!cls) throw std::runtime_error("overlap partition unavailable");
        return *cls;
    };
    guarded(6, "bijection of letter and numbered components", [&] { return check_bijection(need().bijection()); });
    guarded(7, "classification tables", [&] { return compare_tables(need()); });
    std::optional<ClassificationReport> rep;
    guarded(8, "Euler characteristics", [&] {
        rep = euler_report(need());
        auto problems = compare_euler(*rep);
        if (rep->total_chi() != 12) problems.push_back("total chi " + std::to_string(rep->total_chi()));
        for (auto& p : compare_component_cells(*rep)) problems.push_back("cell grouping: " + p);
        return problems;
    });
    guarded(9, "property suites", [&] {
        auto problems = check_point_independence(need(), 10, seed);
        for (auto& p : check_cell_chains(50, seed)) problems.push_back(p);
        if (!rep) throw std::runtime_error("classification report unavailable");
        for (auto& p : check_cell_counts(*rep)) problems.push_back(p);
        return problems;
    });
    return run;
}

} // namespace g2cells

#endif // G2CELLS_ACCEPTANCE_HPP
