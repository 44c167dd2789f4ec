#ifndef G2CELLS_CLI_HPP
#define G2CELLS_CLI_HPP

#include "g2cells/acceptance.hpp"
#include "g2cells/report_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace g2cells::cli {

struct Options {
    std::string word;
    std::string family;
    std::string params;
    std::string signs;
    int samples = 8;
    std::uint64_t seed = 42;
    std::string format = "text";
    std::string out;
    bool symbolic = false;
    bool all = false;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::vector<Rational> require_params(const Options& o) {
    if (o.params.empty()) throw UsageError("--params is required");
    try {
        return parse_rational_list(o.params);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline WeylWord word_or(const Options& o, const WeylWord& fallback) {
    if (o.word.empty()) return fallback;
    try {
        return parse_word(o.word);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline const CellFamily& require_family(const Options& o) {
    if (o.family.empty()) throw UsageError("--family is required");
    try {
        return cell_family(o.family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline Table values_table(const std::vector<Rational>& v) {
    Table t{{"index", "value"}, {}};
    for (std::size_t k = 0; k < v.size(); ++k) t.add({static_cast<int>(k + 1), v[k].get_str()});
    return t;
}

inline std::string render_values(const std::vector<Rational>& v, Format f) {
    if (f != Format::Text) return render(values_table(v), f);
    std::string s;
    for (const auto& q : v) s += (s.empty() ? "" : ",") + q.get_str();
    return s + "\n";
}

inline std::string not_factorizable(Format f) {
    if (f == Format::Json) return "null\n";
    return "not-factorizable\n";
}

/// Overlap results per (samples, seed), computed once per process.
struct Computed {
    OverlapResult overlap;
    std::optional<Classifier> classifier;
    std::optional<ClassificationReport> report;
};

inline Computed& computed(int samples, std::uint64_t seed) {
    static std::map<std::pair<int, std::uint64_t>, Computed> cache;
    auto it = cache.find({samples, seed});
    if (it == cache.end()) it = cache.emplace(std::make_pair(samples, seed), Computed{compute_overlap(samples, seed), {}, {}}).first;
    return it->second;
}

inline const Classifier& classifier(int samples, std::uint64_t seed) {
    Computed& c = computed(samples, seed);
    if (!c.classifier) {
        auto groups = letter_groups(c.overlap.partition);
        auto bij = bijection_map(match_plus_components(c.overlap.partition, groups));
        c.classifier.emplace(c.overlap.partition, std::move(groups), std::move(bij));
    }
    return *c.classifier;
}

inline const ClassificationReport& report(int samples, std::uint64_t seed) {
    Computed& c = computed(samples, seed);
    if (!c.report) c.report = euler_report(classifier(samples, seed));
    return *c.report;
}

inline std::string cmd_minors(const Options& o, Format f) {
    const std::vector<std::string> names{"a", "b", "c", "d", "e", "f"};
    Table t{{"weight", "minor"}, {}};
    if (o.symbolic || o.params.empty()) {
        std::vector<Polynomial> vars;
        for (std::size_t k = 0; k < 6; ++k) vars.push_back(Polynomial::variable(k));
        const SymbolicElement g = product_x<Polynomial>(word_i_tilde(), vars);
        for (const auto& label : minor_table_labels()) t.add({label, minor(g, weight_to_chamber(label)).to_string(names)});
    } else {
        const auto p = require_params(o);
        if (p.size() != 6) throw UsageError("minors takes 6 parameters");
        const Element g = product_x(word_i_tilde(), p);
        for (const auto& label : minor_table_labels()) t.add({label, minor(g, weight_to_chamber(label)).get_str()});
    }
    return render(t, f);
}

inline std::string cmd_cell_point(const Options& o, Format f) {
    const CellFamily& fam = require_family(o);
    const auto params = require_params(o);
    if (static_cast<int>(params.size()) != fam.t_count() + fam.m_count())
        throw UsageError("family " + fam.name + " takes " + std::to_string(fam.t_count() + fam.m_count()) + " parameters");
    std::string h;
    std::size_t next = 0;
    for (auto step : fam.sigma.steps) {
        if (step == StepKind::Up) continue;
        const Rational& v = params[next++];
        if (step == StepKind::Stay) {
            if (v == 0) throw UsageError("t parameters must be nonzero");
            h.push_back(sgn(v) > 0 ? '+' : '-');
        }
    }
    if (!o.signs.empty() && o.signs != h) throw UsageError("--signs " + o.signs + " disagrees with the parameters (" + h + ")");
    const CellId cell{&fam, h};
    const Element g = family_point(fam, params);
    const auto& W = WeylGroup::g2();
    const ChainReport chain = cell_chain(fam, params);

    Table t{{"field", "value"}, {}};
    t.add({"cell", cell.display()});
    t.add({"family", fam.name});
    t.add({"codim", cell.codim()});
    t.add({"unipotent_lower", is_unipotent_lower(g)});
    t.add({"plus_position", W.name(bruhat_position_plus(g))});
    std::string chain_text;
    for (const auto& p : chain.positions) chain_text += (chain_text.empty() ? "" : ",") + W.name(p);
    t.add({"chain", chain_text});
    t.add({"chain_ok", chain.ok()});
    try {
        const Factorization a = alpha_factorize(g, word_i_tilde());
        std::string vals;
        for (const auto& q : a.params) vals += (vals.empty() ? "" : ",") + q.get_str();
        t.add({"alpha", vals});
        t.add({"signs", a.signs()});
        const Classifier& cls = classifier(o.samples, o.seed);
        const char letter = cls.letter_of(a.signs());
        t.add({"letter", std::string(1, letter)});
        t.add({"component", cls.bijection().at(letter)});
    } catch (const NotFactorizable&) {
        t.add({"alpha", "not-factorizable"});
    }
    return render(t, f);
}

inline std::string cmd_epsilon(const Options& o, Format f) {
    const WeylWord w = word_or(o, word_i_tilde());
    const auto p = require_params(o);
    if (p.size() != w.size()) throw UsageError("epsilon takes " + std::to_string(w.size()) + " parameters");
    try {
        return render_values(epsilon_factorize(product_x(w, p), w).params, f);
    } catch (const NotFactorizable&) {
        return not_factorizable(f);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

/// With --family the input is the cell point y_family(params), otherwise y along --word.
inline std::string cmd_alpha(const Options& o, Format f) {
    const WeylWord w = word_or(o, word_i_tilde());
    const auto p = require_params(o);
    Element y;
    try {
        if (!o.family.empty()) y = family_point(require_family(o), p);
        else {
            if (p.size() != w.size()) throw UsageError("alpha takes " + std::to_string(w.size()) + " parameters");
            y = product_y(w, p);
        }
        return render_values(alpha_factorize(y, w).params, f);
    } catch (const NotFactorizable&) {
        return not_factorizable(f);
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline std::string cmd_verify(const Options& o, Format f, bool& ok) {
    const AcceptanceRun run = run_acceptance(o.samples, o.seed);
    ok = run.all_passed();
    if (f == Format::Text) {
        std::string s;
        for (const auto& r : run.results) {
            s += std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + "\n";
            for (const auto& p : r.problems) s += "    " + p + "\n";
        }
        return s;
    }
    Table t{{"criterion", "name", "passed", "problems"}, {}};
    for (const auto& r : run.results) {
        std::string joined;
        for (const auto& p : r.problems) joined += (joined.empty() ? "" : "; ") + p;
        t.add({r.id, r.name, r.passed, joined});
    }
    return render(t, f);
}

/// Runs one command; data goes to `out` (or --out), diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deodhar cells of the real G2 double big cell"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        c->add_option("--out", o.out, "write data to this file");
    };
    auto sampling = [&](CLI::App* c) {
        c->add_option("--samples", o.samples, "overlap samples per node")->check(CLI::PositiveNumber);
        c->add_option("--seed", o.seed, "random seed");
    };

    auto* distinguished = app.add_subcommand("distinguished", "distinguished subexpressions for 1 of a reduced word");
    distinguished->add_option("--word", o.word, "reduced word (default 121212)");
    auto* cells = app.add_subcommand("cells", "the Deodhar cell families");
    auto* cell_point = app.add_subcommand("cell-point", "evaluate a cell point and run the checks on it");
    cell_point->add_option("--family", o.family)->required();
    cell_point->add_option("--params", o.params, "positional parameters (t at I, m at K)")->required();
    cell_point->add_option("--signs", o.signs, "expected signs of the t's");
    sampling(cell_point);
    auto* minors = app.add_subcommand("minors", "chamber minors of x_212121");
    minors->add_flag("--symbolic", o.symbolic, "polynomials in a..f");
    minors->add_option("--params", o.params, "evaluate at a,b,c,d,e,f");
    auto* epsilon = app.add_subcommand("epsilon", "x -> y factorization");
    epsilon->add_option("--word", o.word, "reduced word of w0 (default 212121)");
    epsilon->add_option("--params", o.params)->required();
    auto* alpha = app.add_subcommand("alpha", "y -> x factorization");
    alpha->add_option("--word", o.word, "reduced word of w0 (default 212121)");
    alpha->add_option("--family", o.family, "cell family; params are then positional");
    alpha->add_option("--params", o.params)->required();
    auto* graph = app.add_subcommand("graph", "overlap graph partition");
    sampling(graph);
    auto* bijection = app.add_subcommand("bijection", "letter groups to numbered components");
    sampling(bijection);
    auto* classify = app.add_subcommand("classify", "classify cells");
    classify->add_flag("--all", o.all, "all positive-codimension cells");
    sampling(classify);
    auto* euler = app.add_subcommand("euler", "cell counts and Euler characteristics");
    sampling(euler);
    auto* verify = app.add_subcommand("verify", "run every acceptance check");
    sampling(verify);
    for (auto* c : app.get_subcommands({})) common(c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    int code = 0;
    std::string data;
    try {
        const Format f = parse_format(o.format);
        if (distinguished->parsed()) data = render(distinguished_table(word_or(o, word_i())), f);
        else if (cells->parsed()) data = render(cells_table(), f);
        else if (cell_point->parsed()) data = cmd_cell_point(o, f);
        else if (minors->parsed()) data = cmd_minors(o, f);
        else if (epsilon->parsed()) data = cmd_epsilon(o, f);
        else if (alpha->parsed()) data = cmd_alpha(o, f);
        else if (graph->parsed()) data = render(graph_table(computed(o.samples, o.seed).overlap.partition), f);
        else if (bijection->parsed()) {
            const Partition& p = computed(o.samples, o.seed).overlap.partition;
            data = render(bijection_table(match_plus_components(p, letter_groups(p))), f);
        } else if (classify->parsed()) {
            const ClassificationReport& rep = report(o.samples, o.seed);
            data = f == Format::Text ? classification_text(rep, classifier(o.samples, o.seed)) : render(classification_table(rep, o.all), f);
        } else if (euler->parsed()) {
            data = render(euler_table(report(o.samples, o.seed)), f);
        } else if (verify->parsed()) {
            bool ok = false;
            data = cmd_verify(o, f, ok);
            code = ok ? 0 : 1;
            if (!ok) err << "verify: mismatches found\n";
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (o.out.empty()) {
        out << data;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << o.out << "\n";
            return 1;
        }
        file << data;
    }
    return code;
}

} // namespace g2cells::cli

#endif // G2CELLS_CLI_HPP
