#include "gkm/rational.hpp"

#include "gkm/errors.hpp"

#include <cctype>

namespace gkm {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <typename Parse>
auto parse_list(std::string_view text, Parse parse) {
    std::vector<decltype(parse(text))> out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer parse_integer(std::string_view text) {
    auto s = trim(text);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
    if (!all_digits(digits)) throw ParseError("malformed integer '" + std::string(text) + "'");
    Integer z;
    z.set_str(std::string(digits), 10);
    return (!s.empty() && s.front() == '-') ? Integer(-z) : z;
}

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(parse_integer(s));
        Integer num = parse_integer(s.substr(0, slash));
        auto den_text = s.substr(slash + 1);
        if (!all_digits(den_text)) throw ParseError("");
        Integer den(std::string(den_text), 10);
        if (den == 0) throw ParseError("");
        return make_rational(num, den);
    } catch (const ParseError&) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RatVector parse_rational_list(std::string_view text) { return parse_list(text, parse_rational); }

IntVector parse_integer_list(std::string_view text) { return parse_list(text, parse_integer); }

Rational dot(const RatVector& a, const IntVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
    return s;
}

Integer common_denominator(const RatVector& v) {
    Integer l = 1;
    for (const auto& q : v) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    return l;
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& z : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    }
    return g;
}

bool is_primitive(const IntVector& v) { return content(v) == 1; }

IntVector primitive_direction(const RatVector& v) {
    Integer l = common_denominator(v);
    IntVector out;
    out.reserve(v.size());
    for (const auto& q : v) {
        Rational scaled = q * l;
        out.push_back(scaled.get_num());
    }
    Integer g = content(out);
    if (g == 0) return out;
    for (auto& z : out) z /= g;
    return out;
}

}  // namespace gkm
