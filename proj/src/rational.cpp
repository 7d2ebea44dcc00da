#include "apolar/rational.hpp"

#include <algorithm>
#include <cctype>

namespace apolar {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(std::string_view s) {
    std::string owned(s);
    if (!owned.empty() && owned.front() == '+') owned.erase(0, 1);
    return Integer(owned, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw InvalidInput("malformed rational: '" + std::string(text) + "'");
    Integer q = parse_integer(den);
    if (q == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    Rational r(parse_integer(num), q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer falling_factorial(unsigned long n, unsigned long m) {
    if (m > n) return 0;
    Integer r = 1;
    for (unsigned long i = 0; i < m; ++i) r *= n - i;
    return r;
}

bool is_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RationalVector primitive_normalize(const RationalVector& v) {
    if (is_zero(v)) return v;
    Integer den_lcm = 1;
    for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> ints;
    ints.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Integer n = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(std::move(n));
    }
    auto first = std::find_if(ints.begin(), ints.end(), [](const Integer& n) { return n != 0; });
    if (*first < 0) g = -g;
    RationalVector out;
    out.reserve(v.size());
    for (auto& n : ints) out.emplace_back(Integer(n / g));
    return out;
}

}  // namespace apolar
