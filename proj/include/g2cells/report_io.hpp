#ifndef G2CELLS_REPORT_IO_HPP
#define G2CELLS_REPORT_IO_HPP

#include "g2cells/components.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2cells {

enum class Format { Text, Json, Csv };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + s + "'");
}

/// Rows of JSON scalars under named columns; rendered as aligned text, CSV or a JSON array of objects.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;

    void add(std::vector<nlohmann::json> row) {
        if (row.size() != columns.size()) throw std::logic_error("table row width");
        rows.push_back(std::move(row));
    }
};

namespace detail {
inline std::string cell_text(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}
} // namespace detail

inline std::string render_text(const Table& t) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& r : t.rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], detail::cell_text(r[c]).size());
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) s += "  ";
            s += cells[c];
            if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size(), ' ');
        }
        s.erase(s.find_last_not_of(' ') + 1);
        os << s << "\n";
    };
    line(t.columns);
    for (const auto& r : t.rows) {
        std::vector<std::string> cells;
        for (const auto& v : r) cells.push_back(detail::cell_text(v));
        line(cells);
    }
    return os.str();
}

inline std::string render_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << detail::csv_field(t.columns[c]);
    os << "\n";
    for (const auto& r : t.rows) {
        for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << detail::csv_field(detail::cell_text(r[c]));
        os << "\n";
    }
    return os.str();
}

inline nlohmann::json to_json(const Table& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t c = 0; c < r.size(); ++c) obj[t.columns[c]] = r[c];
        arr.push_back(std::move(obj));
    }
    return arr;
}

inline std::string render(const Table& t, Format f) {
    switch (f) {
    case Format::Text: return render_text(t);
    case Format::Csv: return render_csv(t);
    case Format::Json: return to_json(t).dump(2) + "\n";
    }
    return {};
}

inline std::string weyl_name(const WeylElement& w) { return WeylGroup::g2().name(w); }

inline Table distinguished_table(const WeylWord& word) {
    Table t{{"name", "sigma", "I", "J", "K"}, {}};
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (int k : v) s += (s.empty() ? "" : " ") + std::to_string(k);
        return s;
    };
    for (const auto& s : WeylGroup::g2().enumerate_distinguished(word)) {
        std::string chain;
        for (const auto& e : s.sigma) chain += (chain.empty() ? "" : ",") + weyl_name(e);
        t.add({s.name(), "(" + chain + ")", join(s.I()), join(s.J()), join(s.K())});
    }
    return t;
}

inline Table cells_table() {
    Table t{{"family", "sigma", "dim", "codim", "cells"}, {}};
    for (const auto& f : cell_families()) {
        std::string chain;
        for (const auto& e : f.sigma.sigma) chain += (chain.empty() ? "" : ",") + weyl_name(e);
        t.add({f.name, "(" + chain + ")", f.dim, f.codim, 1 << f.t_count()});
    }
    return t;
}

inline Table graph_table(const Partition& p) {
    Table t{{"component", "word", "signs"}, {}};
    for (std::size_t k = 0; k < p.components.size(); ++k)
        for (const auto& n : p.components[k])
            t.add({static_cast<int>(k + 1), n.word == WordTag::I ? "121212" : "212121", n.signs});
    return t;
}

inline Table bijection_table(const std::vector<BijectionEntry>& b) {
    Table t{{"letter", "representative", "component"}, {}};
    for (const auto& e : b) t.add({std::string(1, e.letter), e.representative, e.component});
    return t;
}

/// Stable record schema {cell, family, signs, component, codim}; signs are the alpha-side signs.
inline Table classification_table(const ClassificationReport& rep, bool include_codim0 = false) {
    Table t{{"cell", "family", "signs", "component", "codim"}, {}};
    for (const auto& c : rep.cells) {
        if (c.cell.codim() == 0 && !include_codim0) continue;
        t.add({c.cell.display(), c.cell.family->name, c.x_signs, c.component, c.cell.codim()});
    }
    return t;
}

inline Table euler_table(const ClassificationReport& rep) {
    Table t{{"component", "n0", "n1", "n2", "chi"}, {}};
    for (const auto& c : rep.counts) t.add({c.component, c.n0, c.n1, c.n2, c.chi()});
    return t;
}

/// Text layout grouped by family, with letter and component: "0+*0+*  ---+++  K <-> 11".
inline std::string classification_text(const ClassificationReport& rep, const Classifier& cls) {
    std::ostringstream os;
    for (const auto& t : fixtures::classification_tables()) {
        os << t.number << ". y_" << t.family << "\n";
        for (const auto& c : rep.cells) {
            if (c.cell.family->name != t.family) continue;
            os << "  " << c.cell.display() << "  " << c.x_signs << "  " << cls.letter_of(c.x_signs) << " <-> " << c.component << "\n";
        }
    }
    return os.str();
}

struct ClassificationRecord {
    std::string cell, family, signs;
    int component = 0;
    int codim = 0;
    friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

inline std::vector<ClassificationRecord> records(const ClassificationReport& rep, bool include_codim0 = false) {
    std::vector<ClassificationRecord> out;
    for (const auto& c : rep.cells) {
        if (c.cell.codim() == 0 && !include_codim0) continue;
        out.push_back({c.cell.display(), c.cell.family->name, c.x_signs, c.component, c.cell.codim()});
    }
    return out;
}

inline std::vector<ClassificationRecord> parse_classification_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    std::vector<ClassificationRecord> out;
    for (const auto& o : arr)
        out.push_back({o.at("cell").get<std::string>(), o.at("family").get<std::string>(), o.at("signs").get<std::string>(),
                       o.at("component").get<int>(), o.at("codim").get<int>()});
    return out;
}

} // namespace g2cells

#endif // G2CELLS_REPORT_IO_HPP
