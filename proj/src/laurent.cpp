#include "tricobracket/laurent.hpp"

#include <cstdlib>

namespace tricob {

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : coeffs_) {
        long long mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (e == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag);
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace tricob
