#include "g2cells/components.hpp"

#include <gtest/gtest.h>

using namespace g2cells;

namespace {

struct Shared {
    OverlapResult overlap;
    Classifier cls;
    ClassificationReport report;
};

const Shared& shared() {
    static const Shared s = [] {
        OverlapResult r = compute_overlap();
        auto groups = letter_groups(r.partition);
        auto bij = bijection_map(match_plus_components(r.partition, groups));
        Classifier cls(r.partition, std::move(groups), std::move(bij));
        ClassificationReport rep = euler_report(cls);
        return Shared{std::move(r), std::move(cls), std::move(rep)};
    }();
    return s;
}

const CellClassification& find(const std::string& display) {
    for (const auto& c : shared().report.cells)
        if (c.cell.display() == display) return c;
    throw std::out_of_range(display);
}

} // namespace

TEST(Components, SignVectors) {
    const auto v = all_sign_vectors();
    EXPECT_EQ(v.size(), 64u);
    EXPECT_EQ(v.front(), "++++++");
    EXPECT_EQ(std::set<std::string>(v.begin(), v.end()).size(), 64u);
}

TEST(Components, GraphShape) {
    const OverlapGraph& g = shared().overlap.graph;
    EXPECT_EQ(g.nodes.size(), 128u);
    EXPECT_EQ(g.samples, 8);
    EXPECT_EQ(g.edges.size(), 260u);
    for (const auto& [a, b] : g.edges) EXPECT_NE(g.nodes[a].word, g.nodes[b].word);
    auto has_edge = [&](const std::string& a, const std::string& b) {
        const auto i = g.id({WordTag::I, a}), j = g.id({WordTag::ITilde, b});
        return g.edges.count({std::min(i, j), std::max(i, j)}) > 0;
    };
    EXPECT_TRUE(has_edge("++++++", "++++++"));
    EXPECT_TRUE(has_edge("+-+-+-", "-+-+-+"));
}

TEST(Components, GraphIsDeterministic) {
    const OverlapGraph g = build_overlap_graph(8, 42);
    EXPECT_EQ(g.edges, shared().overlap.graph.edges);
}

TEST(Components, PartitionMatchesReference) {
    const Partition& p = shared().overlap.partition;
    ASSERT_EQ(p.components.size(), 11u);
    const std::vector<std::size_t> sizes{2, 2, 2, 2, 16, 16, 16, 16, 16, 16, 24};
    for (std::size_t k = 0; k < 11; ++k) {
        EXPECT_EQ(p.components[k].size(), sizes[k]);
        const std::set<SignNode> mine(p.components[k].begin(), p.components[k].end());
        EXPECT_EQ(mine, fixture_members(fixtures::overlap_components()[k]));
    }
    EXPECT_EQ(p.component_of({WordTag::I, "++++++"}), 1);
    EXPECT_EQ(p.component_of({WordTag::ITilde, "++++++"}), 1);
    int per_word = 0;
    for (const auto& n : p.components[10]) per_word += n.word == WordTag::I;
    EXPECT_EQ(per_word, 12);
}

TEST(Components, MismatchIsReported) {
    OverlapGraph g = shared().overlap.graph;
    g.edges.clear();
    EXPECT_THROW(connected_components(g), PartitionMismatch);
}

TEST(Components, Bijection) {
    const std::map<char, int> want{{'A', 1}, {'B', 2}, {'C', 3}, {'D', 4}, {'E', 5}, {'F', 6},
                                   {'G', 7}, {'H', 8}, {'I', 10}, {'J', 9}, {'K', 11}};
    EXPECT_EQ(shared().cls.bijection(), want);
    EXPECT_EQ(shared().cls.bijection(), fixtures::letter_bijection());
    EXPECT_EQ(shared().cls.groups().size(), 11u);
}

TEST(Components, ClassifyExamples) {
    const auto& a = find("0+*0+*");
    EXPECT_EQ(a.x_signs, "---+++");
    EXPECT_EQ(a.letter, 'K');
    EXPECT_EQ(a.component, 11);
    const auto& b = find("++0+*+");
    EXPECT_EQ(b.x_signs, "+-+++-");
    EXPECT_EQ(b.letter, 'H');
    EXPECT_EQ(b.component, 8);
    const auto& c = find("+00+**");
    EXPECT_EQ(c.x_signs, "-+++-+");
    EXPECT_EQ(c.letter, 'F');
    EXPECT_EQ(c.component, 6);
}

TEST(Components, ClassificationTables) {
    std::size_t rows = 0;
    for (const auto& t : fixtures::classification_tables()) rows += t.rows.size();
    EXPECT_EQ(rows, 76u);
    const auto diff = compare_tables(shared().cls);
    EXPECT_TRUE(diff.empty()) << diff.front();
}

TEST(Components, EulerCharacteristics) {
    const auto& rep = shared().report;
    EXPECT_TRUE(compare_euler(rep).empty());
    EXPECT_EQ(rep.total_chi(), 12);
    int n0 = 0, n1 = 0, n2 = 0;
    for (const auto& c : rep.counts) {
        n0 += c.n0;
        n1 += c.n1;
        n2 += c.n2;
    }
    EXPECT_EQ(n0, 64);
    EXPECT_EQ(n1, 64);
    EXPECT_EQ(n2, 12);
    EXPECT_EQ(rep.counts[10].n0, 12);
    EXPECT_EQ(rep.counts[10].n1, 16);
    EXPECT_EQ(rep.counts[10].n2, 6);
    EXPECT_EQ(rep.counts[0].chi(), 1);
}

TEST(Components, CellGroupingWithErrata) {
    EXPECT_TRUE(compare_component_cells(shared().report).empty());
    // the two swapped codim-0 cells follow the overlap partition
    EXPECT_EQ(find("-+-+-+").component, 4);
    EXPECT_EQ(find("+-+-+-").component, 3);
}

TEST(Components, FamilyCellCounts) { EXPECT_TRUE(check_cell_counts(shared().report).empty()); }

TEST(Components, PointIndependence) {
    ParamSampler s(77);
    for (const auto& c : shared().report.cells) {
        if (c.cell.codim() == 0) continue;
        int good = 0;
        for (int k = 0; k < 40 && good < 3; ++k) {
            try {
                EXPECT_EQ(shared().cls.classify_at(c.cell, s.cell_params(c.cell)).component, c.component) << c.cell.display();
                ++good;
            } catch (const NotFactorizable&) {
            }
        }
        EXPECT_EQ(good, 3) << c.cell.display();
    }
}
