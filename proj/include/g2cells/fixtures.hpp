#ifndef G2CELLS_FIXTURES_HPP
#define G2CELLS_FIXTURES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace g2cells::fixtures {

/// Components 1..11 of the real double big cell as (word 121212 signs, word 212121 signs) rows.
struct OverlapComponent {
    int number;
    std::vector<std::pair<std::string, std::string>> rows;
};

inline const std::vector<OverlapComponent>& overlap_components() {
    static const std::vector<OverlapComponent> data{
        {1, {{"++++++", "++++++"}}},
        {2, {{"------", "------"}}},
        {3, {{"+-+-+-", "-+-+-+"}}},
        {4, {{"-+-+-+", "+-+-+-"}}},
        {5, {{"++-+-+", "+-+-++"}, {"--++-+", "+-++--"}, {"-+---+", "+---+-"}, {"----++", "++----"}, {"-+-++-", "-++-+-"}, {"---+--", "--+---"}, {"-++---", "---++-"}, {"+-----", "-----+"}}},
        {6, {{"--+-+-", "-+-+--"}, {"++--+-", "-+--++"}, {"+-+++-", "-+++-+"}, {"++++--", "--++++"}, {"+-+--+", "+--+-+"}, {"+++-++", "++-+++"}, {"+--+++", "+++--+"}, {"-+++++", "+++++-"}}},
        {7, {{"+-+-++", "++-+-+"}, {"+-++--", "--++-+"}, {"+---+-", "-+---+"}, {"++----", "----++"}, {"-++-+-", "-+-++-"}, {"--+---", "---+--"}, {"---++-", "-++---"}, {"-----+", "+-----"}}},
        {8, {{"-+-+--", "--+-+-"}, {"-+--++", "++--+-"}, {"-+++-+", "+-+++-"}, {"--++++", "++++--"}, {"+--+-+", "+-+--+"}, {"++-+++", "+++-++"}, {"+++--+", "+--+++"}, {"+++++-", "-+++++"}}},
        {9, {{"-+-+++", "++++-+"}, {"+--++-", "++-+--"}, {"-++++-", "++--++"}, {"---+-+", "+-++++"}, {"+-+---", "----+-"}, {"-++--+", "--+-++"}, {"+----+", "--++--"}, {"+++-+-", "-+----"}}},
        {10, {{"++++-+", "-+-+++"}, {"++-+--", "+--++-"}, {"++--++", "-++++-"}, {"+-++++", "---+-+"}, {"----+-", "+-+---"}, {"--+-++", "-++--+"}, {"--++--", "+----+"}, {"-+----", "+++-+-"}}},
        {11, {{"---+++", "+++---"}, {"-++-++", "++-++-"}, {"+---++", "++---+"}, {"+-++-+", "+-++-+"}, {"--+--+", "+--+--"}, {"++---+", "+---++"}, {"+++---", "---+++"}, {"+--+--", "--+--+"}, {"-+++--", "--+++-"}, {"-+--+-", "-+--+-"}, {"++-++-", "-++-++"}, {"--+++-", "-+++--"}}},
    };
    return data;
}

/// Components A..K of the upper cell, by sign vectors of x_{212121}.
struct LetterComponent {
    char letter;
    std::vector<std::string> signs;
};

inline const std::vector<LetterComponent>& letter_components() {
    static const std::vector<LetterComponent> data{
        {'A', {"++++++"}},
        {'B', {"------"}},
        {'C', {"-+-+-+"}},
        {'D', {"+-+-+-"}},
        {'E', {"+-+-++", "+-++--", "+---+-", "++----", "-++-+-", "--+---", "---++-", "-----+"}},
        {'F', {"-+-+--", "-+--++", "-+++-+", "--++++", "+--+-+", "++-+++", "+++--+", "+++++-"}},
        {'G', {"++-+-+", "--++-+", "-+---+", "----++", "-+-++-", "---+--", "-++---", "+-----"}},
        {'H', {"--+-+-", "++--+-", "+-+++-", "++++--", "+-+--+", "+++-++", "+--+++", "-+++++"}},
        {'I', {"++++-+", "----+-", "++-+--", "--+-++", "++--++", "--++--", "+-++++", "-+----"}},
        {'J', {"-+-+++", "+-+---", "+--++-", "-++--+", "-++++-", "+----+", "---+-+", "+++-+-"}},
        {'K', {"+++---", "---+++", "++-++-", "--+--+", "++---+", "--+++-", "+-++-+", "-+--+-", "+--+--", "-++-++", "+---++", "-+++--"}},
    };
    return data;
}

inline const std::map<char, int>& letter_bijection() {
    static const std::map<char, int> data{{'A', 1}, {'B', 2}, {'C', 3}, {'D', 4}, {'E', 5}, {'F', 6}, {'G', 7}, {'H', 8}, {'I', 10}, {'J', 9}, {'K', 11}};
    return data;
}

struct ClassificationRow {
    std::string cell;    // +/- at I, 0 at J, * at K
    std::string x_signs; // signs of the alpha parameters
    char letter;
    int component;
};

struct ClassificationTable {
    int number;
    std::string family;
    std::vector<ClassificationRow> rows;
};

inline const std::vector<ClassificationTable>& classification_tables() {
    static const std::vector<ClassificationTable> data{
        {1, "1x12x2", {
            {"0+*0+*", "---+++", 'K', 11},
            {"0+*0-*", "---+-+", 'J', 9},
            {"0-*0+*", "--+-++", 'I', 10},
            {"0-*0-*", "--+--+", 'K', 11},
        }},
        {2, "xx1x1x", {
            {"++0+*+", "+-+++-", 'H', 8},
            {"++0+*-", "--+++-", 'K', 11},
            {"++0-*+", "+-++++", 'I', 10},
            {"++0-*-", "--++++", 'F', 6},
            {"+-0+*+", "+--+-+", 'F', 6},
            {"+-0+*-", "---+-+", 'J', 9},
            {"+-0-*+", "+--+--", 'K', 11},
            {"+-0-*-", "---+--", 'G', 7},
            {"-+0+*+", "+-+---", 'J', 9},
            {"-+0+*-", "--+---", 'E', 5},
            {"-+0-*+", "+-+--+", 'H', 8},
            {"-+0-*-", "--+--+", 'K', 11},
            {"--0+*+", "+---++", 'K', 11},
            {"--0+*-", "----++", 'G', 7},
            {"--0-*+", "+---+-", 'E', 5},
            {"--0-*-", "----+-", 'I', 10},
        }},
        {3, "1x1xxx", {
            {"0+*+++", "+--+-+", 'F', 6},
            {"0+*++-", "---+-+", 'J', 9},
            {"0+*+-+", "+-+--+", 'H', 8},
            {"0+*+--", "--+--+", 'K', 11},
            {"0+*-++", "+-++-+", 'K', 11},
            {"0+*-+-", "--++-+", 'G', 7},
            {"0+*--+", "+----+", 'J', 9},
            {"0+*---", "-----+", 'E', 5},
            {"0-*+++", "+--+++", 'H', 8},
            {"0-*++-", "---+++", 'K', 11},
            {"0-*+-+", "+-+-++", 'E', 5},
            {"0-*+--", "--+-++", 'I', 10},
            {"0-*-++", "+-++++", 'I', 10},
            {"0-*-+-", "--++++", 'F', 6},
            {"0-*--+", "+---++", 'K', 11},
            {"0-*---", "----++", 'G', 7},
        }},
        {4, "12x21x", {
            {"00+**+", "+-+++-", 'H', 8},
            {"00+**-", "--+++-", 'K', 11},
            {"00-**+", "+--+--", 'K', 11},
            {"00-**-", "---+--", 'G', 7},
        }},
        {5, "xxx2x2", {
            {"+++0+*", "-+++-+", 'F', 6},
            {"+++0-*", "-+++++", 'H', 8},
            {"++-0+*", "--++--", 'I', 10},
            {"++-0-*", "--+++-", 'K', 11},
            {"+-+0+*", "-+---+", 'G', 7},
            {"+-+0-*", "-+-+--", 'F', 6},
            {"+--0+*", "---+++", 'K', 11},
            {"+--0-*", "---+-+", 'J', 9},
            {"-++0+*", "-++-++", 'K', 11},
            {"-++0-*", "-++--+", 'J', 9},
            {"-+-0+*", "--+-+-", 'H', 8},
            {"-+-0-*", "--+---", 'E', 5},
            {"--+0+*", "-+----", 'I', 10},
            {"--+0-*", "-+--+-", 'K', 11},
            {"---0+*", "-----+", 'E', 5},
            {"---0-*", "---+--", 'G', 7},
        }},
        {6, "x2x2xx", {
            {"+0+*++", "--++--", 'I', 10},
            {"+0+*+-", "-+-+--", 'F', 6},
            {"+0+*-+", "-+++--", 'K', 11},
            {"+0+*--", "---+--", 'G', 7},
            {"+0-*++", "--++++", 'F', 6},
            {"+0-*+-", "-+-+++", 'J', 9},
            {"+0-*-+", "-+++++", 'H', 8},
            {"+0-*--", "---+++", 'K', 11},
            {"-0+*++", "--+-+-", 'H', 8},
            {"-0+*+-", "-+--+-", 'K', 11},
            {"-0+*-+", "-++-+-", 'E', 5},
            {"-0+*--", "----+-", 'I', 10},
            {"-0-*++", "--+--+", 'K', 11},
            {"-0-*+-", "-+---+", 'G', 7},
            {"-0-*-+", "-++--+", 'J', 9},
            {"-0-*--", "-----+", 'E', 5},
        }},
        {7, "x21x12", {
            {"+00+**", "-+++-+", 'F', 6},
            {"+00-**", "-+++--", 'K', 11},
            {"-00+**", "---+++", 'K', 11},
            {"-00-**", "---++-", 'E', 5},
        }},
    };
    return data;
}

/// Cells grouped by component; codim-0 cells are written by their 121212 signs.
inline const std::vector<std::vector<std::string>>& component_cells() {
    static const std::vector<std::vector<std::string>> data{
        {"++++++"},
        {"------"},
        {"-+-+-+"},
        {"+-+-+-"},
        {"++-+-+", "--++-+", "-+---+", "----++", "-+-++-", "---+--", "-++---", "+-----", "-+0+*-", "--0-*+", "0+*---", "0-*+-+", "-+-0-*", "---0+*", "-0+*-+", "-0-*--", "-00-**"},
        {"--+-+-", "++--+-", "+-+++-", "++++--", "+-+--+", "+++-++", "+--+++", "-+++++", "++0-*-", "+-0+*+", "0+*+++", "0-*-+-", "+++0+*", "+-+0-*", "+0+*+-", "+0-*++", "+00+**"},
        {"+-+-++", "+-++--", "+---+-", "++----", "-++-+-", "--+---", "---++-", "-----+", "+-0-*-", "--0+*-", "0+*-+-", "0-*---", "+-+0+*", "---0-*", "+0+*--", "-0-*+-", "00-**-"},
        {"-+-+--", "-+--++", "-+++-+", "--++++", "+--+-+", "++-+++", "+++--+", "+++++-", "++0+*+", "-+0-*+", "0+*+-+", "0-*+++", "+++0-*", "-+-0+*", "+0-*-+", "-0+*++", "00+**+"},
        {"-+-+++", "+--++-", "-++++-", "---+-+", "+-+---", "-++--+", "+----+", "+++-+-", "+-0+*-", "-+0+*+", "0+*++-", "0+*--+", "+--0-*", "-++0-*", "+0-*+-", "-0-*-+", "0+*0-*"},
        {"++++-+", "++-+--", "++--++", "+-++++", "----+-", "--+-++", "--++--", "-+----", "++0-*+", "--0-*-", "0-*+--", "0-*-++", "++-0+*", "--+0+*", "+0+*++", "-0+*--", "0-*0+*"},
        {"---+++", "-++-++", "+---++", "+-++-+", "--+--+", "++---+", "+++---", "+--+--", "-+++--", "-+--+-", "++-++-", "--+++-", "++0+*-", "+-0-*+", "-+0-*-", "--0+*+", "0+*+--", "0+*-++", "0-*++-", "0-*--+", "++-0-*", "+--0+*", "-++0+*", "--+0-*", "+0+*-+", "+0-*--", "-0+*+-", "-0-*++", "+00-**", "-00+**", "00+**-", "00-**+", "0+*0+*", "0-*0-*"},
    };
    return data;
}

struct EulerRow {
    int component, n0, n1, n2, chi;
};

inline const std::vector<EulerRow>& euler_table() {
    static const std::vector<EulerRow> data{
        {1, 1, 0, 0, 1},
        {2, 1, 0, 0, 1},
        {3, 1, 0, 0, 1},
        {4, 1, 0, 0, 1},
        {5, 8, 8, 1, 1},
        {6, 8, 8, 1, 1},
        {7, 8, 8, 1, 1},
        {8, 8, 8, 1, 1},
        {9, 8, 8, 1, 1},
        {10, 8, 8, 1, 1},
        {11, 12, 16, 6, 2},
    };
    return data;
}

/// Distinguished subexpressions of 121212 for 1, with sigma chains written as words.
struct DistinguishedRow {
    std::string name;
    std::vector<std::string> chain;
};

inline const std::vector<DistinguishedRow>& distinguished_121212() {
    static const std::vector<DistinguishedRow> data{
        {"xxxxxx", {"1", "1", "1", "1", "1", "1", "1"}},
        {"1x1xxx", {"1", "s1", "s1", "1", "1", "1", "1"}},
        {"x2x2xx", {"1", "1", "s2", "s2", "1", "1", "1"}},
        {"xx1x1x", {"1", "1", "1", "s1", "s1", "1", "1"}},
        {"xxx2x2", {"1", "1", "1", "1", "s2", "s2", "1"}},
        {"1x12x2", {"1", "s1", "s1", "1", "s2", "s2", "1"}},
        {"12x21x", {"1", "s1", "s1s2", "s1s2", "s1", "1", "1"}},
        {"x21x12", {"1", "1", "s2", "s2s1", "s2s1", "s2", "1"}},
    };
    return data;
}

/// Minors of x_{212121}(a, b, c, d, e, f), keyed by chamber weight.
inline const std::vector<std::pair<std::string, std::string>>& symbolic_minors() {
    static const std::vector<std::pair<std::string, std::string>> data{
        {"e1", "1"},
        {"-e3", "f+d+b"},
        {"-e2", "e*d+e*b+b*c"},
        {"e2", "f^2*e*d+f^2*e*b+f^2*b*c+2*b*c*d*f+b*c*d^2"},
        {"e3", "b*c*d^2*e"},
        {"-e1", "b*c*d^2*e*f"},
        {"e1-e3", "1"},
        {"e1-e2", "e+c+a"},
        {"e2-e3", "f^3*e+f^3*c+f^3*a+3*f^2*c*d+3*f^2*a*d+3*f^2*a*b+3*f*d^2*c+3*f*d^2*a"
                  "+6*f*a*b*d+3*f*a*b^2+d^3*c+d^3*a+3*a*b*d^2+3*a*b^2*d+a*b^3"},
        {"e3-e2", "e^2*d^3*c+e^2*d^3*a+3*e^2*a*b*d^2+3*e^2*a*b^2*d+e^2*a*b^3+3*e*a*b^2*c*d"
                  "+2*e*a*b^3*c+a*b^3*c^2"},
        {"e2-e1", "f^3*e^2*d^3*c+f^3*e^2*d^3*a+3*f^3*e^2*a*b*d^2+3*f^3*e^2*a*b^2*d+f^3*e^2*a*b^3"
                  "+3*f^3*e*a*b^2*c*d+2*f^3*e*a*b^3*c+f^3*a*b^3*c^2+3*f^2*e*a*b^2*c*d^2"
                  "+3*f^2*e*a*b^3*c*d+3*f^2*a*b^3*c^2*d+3*a*b^3*c^2*d^2*f+a*b^3*c^2*d^3"},
        {"e3-e1", "a*b^3*c^2*d^3*e"},
    };
    return data;
}

} // namespace g2cells::fixtures

#endif // G2CELLS_FIXTURES_HPP
