#ifndef G2CELLS_G2CELLS_HPP
#define G2CELLS_G2CELLS_HPP

#include "g2cells/rational.hpp"
#include "g2cells/polynomial.hpp"
#include "g2cells/matrix.hpp"
#include "g2cells/weight.hpp"
#include "g2cells/weyl.hpp"
#include "g2cells/rep.hpp"
#include "g2cells/minors.hpp"
#include "g2cells/chamber.hpp"
#include "g2cells/deodhar.hpp"
#include "g2cells/fixtures.hpp"
#include "g2cells/components.hpp"

#endif // G2CELLS_G2CELLS_HPP
