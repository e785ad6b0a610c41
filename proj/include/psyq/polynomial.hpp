#pragma once

#include <map>
#include <string>
#include <string_view>

namespace psyq {

// Sparse polynomial in u with nonnegative integer coefficients and
// exponents, printed in descending exponent order ("u^4 + 3", "9u", "48").
class InDegreePolynomial {
public:
    void add_term(long exponent, long coefficient);

    long coefficient(long exponent) const;
    long eval_at_one() const;           // sum of coefficients
    long weighted_degree_sum() const;   // sum exponent * coefficient
    bool empty() const { return terms_.empty(); }

    const std::map<long, long, std::greater<long>>& terms() const { return terms_; }

    std::string to_string() const;
    // Accepts the printed form: optional coefficient, "u", optional "^exp",
    // terms joined by '+'. Whitespace is free.
    static InDegreePolynomial parse(std::string_view text);

    bool operator==(const InDegreePolynomial&) const = default;

private:
    std::map<long, long, std::greater<long>> terms_; // exponent -> coefficient > 0
};

} // namespace psyq
