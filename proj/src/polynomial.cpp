#include "noedyn/polynomial.hpp"

#include <sstream>

namespace noedyn {

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() <= 0) return out;
    // Yun's algorithm.
    Polynomial a = p.monic();
    Polynomial d = a.derivative();
    Polynomial g = poly_gcd(a, d);
    Polynomial b = a / g;
    Polynomial c = d / g;
    int k = 1;
    while (b.degree() >= 1) {
        Polynomial w = c - b.derivative();
        Polynomial f = poly_gcd(b, w);
        if (f.degree() >= 1) out.emplace_back(f, k);
        b = b / f;
        c = w / f;
        ++k;
    }
    return out;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = coeff(i);
        if (a == 0) continue;
        Rational mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) {
            if (mag != 1) os << "*";
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

std::string poly_to_string(const Polynomial& p, const std::string& var) { return p.str(var); }

}  // namespace noedyn
