#include "qgcat/lie/tables.hpp"

namespace qgcat::lie {

int tabulated_galois_d(const LieType& t) {
    const int r = t.rank();
    switch (t.family()) {
    case Family::A: return r + 1;
    case Family::B: return r % 2 == 1 ? 2 : 1;
    case Family::C: return 1;
    case Family::D: return r % 2 == 0 ? 2 : 4;
    case Family::E: return r == 6 ? 3 : r == 7 ? 2 : 1;
    case Family::F:
    case Family::G: return 1;
    }
    return 1;
}

} // namespace qgcat::lie
