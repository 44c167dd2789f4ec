#ifndef G2CELLS_CHEVALLEY_DUMP_HPP
#define G2CELLS_CHEVALLEY_DUMP_HPP

#include "g2cells/rep.hpp"

#include <sstream>
#include <string>

namespace g2cells {

/// Plain-text listing of e_i, f_i, h_i and the weights in both representations.
inline std::string chevalley_dump() {
    std::ostringstream os;
    const auto& reps = representations();
    for (const Representation* rep : {&reps.v7, &reps.v14}) {
        os << "# " << rep->label << " dim " << rep->dim << "\n";
        os << "weights";
        for (const auto& w : rep->weights) os << " " << epsilon_name(w);
        os << "\n";
        auto dump = [&](const char* name, int i, const RationalMatrix& m) {
            os << name << i << "\n";
            for (std::size_t r = 0; r < m.rows(); ++r) {
                for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
                os << "\n";
            }
        };
        for (int i = 0; i < 2; ++i) dump("e", i + 1, rep->e[i]);
        for (int i = 0; i < 2; ++i) dump("f", i + 1, rep->f[i]);
        for (int i = 0; i < 2; ++i) dump("h", i + 1, rep->h[i]);
    }
    return os.str();
}

} // namespace g2cells

#endif // G2CELLS_CHEVALLEY_DUMP_HPP
