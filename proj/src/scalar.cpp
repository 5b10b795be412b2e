#include "richlines/scalar.hpp"

#include "richlines/errors.hpp"

#include <algorithm>
#include <cctype>

namespace richlines {

namespace {

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_integer_text(num) || (slash != std::string_view::npos && !valid_integer_text(den)))
        throw ParseError("not a rational: '" + std::string(text) + "'");
    std::string n(num.front() == '+' ? num.substr(1) : num);
    Rational q;
    if (slash == std::string_view::npos) {
        q = Rational(Integer(n));
    } else {
        std::string d(den.front() == '+' ? den.substr(1) : den);
        Integer dz(d);
        if (dz == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
        q = Rational(Integer(n), dz);
        q.canonicalize();
    }
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace richlines
