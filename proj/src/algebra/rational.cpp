#include "starpt/algebra/rational.hpp"

#include "starpt/algebra/unipoly.hpp"

namespace starpt::algebra {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const UniPoly<Rational>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (sgn(c[k]) == 0) continue;
        Rational a = abs(c[k]);
        out += sgn(c[k]) < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
        if (k == 0) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace starpt::algebra
