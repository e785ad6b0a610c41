#include "psyq/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace psyq {

void InDegreePolynomial::add_term(long exponent, long coefficient) {
    if (coefficient == 0) return;
    if (exponent < 0 || coefficient < 0)
        throw std::invalid_argument("terms must have nonnegative exponent and coefficient");
    long& c = terms_[exponent];
    c += coefficient;
    if (c == 0) terms_.erase(exponent);
}

long InDegreePolynomial::coefficient(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

long InDegreePolynomial::eval_at_one() const {
    long s = 0;
    for (auto& [e, c] : terms_) s += c;
    return s;
}

long InDegreePolynomial::weighted_degree_sum() const {
    long s = 0;
    for (auto& [e, c] : terms_) s += e * c;
    return s;
}

std::string InDegreePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0) { os << c; continue; }
        if (c != 1) os << c;
        os << 'u';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

InDegreePolynomial InDegreePolynomial::parse(std::string_view text) {
    InDegreePolynomial p;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> long {
        long v = 0;
        bool any = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            any = true;
            ++i;
        }
        if (!any) throw std::invalid_argument("bad polynomial: digit expected in '" +
                                              std::string(text) + "'");
        return v;
    };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty polynomial");
    for (;;) {
        skip_ws();
        long coeff = 1;
        bool have_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = read_int();
            have_coeff = true;
        }
        long exp = 0;
        if (i < text.size() && text[i] == 'u') {
            ++i;
            exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                exp = read_int();
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("bad polynomial term in '" + std::string(text) + "'");
        }
        if (!(coeff == 0 && exp == 0)) p.add_term(exp, coeff);
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '+')
            throw std::invalid_argument("bad polynomial separator in '" + std::string(text) + "'");
        ++i;
    }
    return p;
}

} // namespace psyq
