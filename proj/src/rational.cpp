#include "wrt/rational.hpp"

#include <sstream>

namespace wrt {

std::string RationalPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i >= 1) os << "*x";
        if (i >= 2) os << '^' << i;
        first = false;
    }
    return os.str();
}

}  // namespace wrt
