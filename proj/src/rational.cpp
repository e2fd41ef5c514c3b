#include "polyent/rational.hpp"

#include <cctype>
#include <ostream>

namespace polyent {

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    // cpp_rational reduces but rejects negative denominators; normalize the
    // sign ourselves so the canonical form always has den > 0.
    if (den < 0)
        v_ = BigRat(-num, -den);
    else
        v_ = BigRat(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

int rat_cmp(const Rational& a, const Rational& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

Rational Rational::parse(const std::string& s) {
    auto bad = [&] { throw ParseError("malformed rational: '" + s + "'"); };
    std::size_t i = 0, n = s.size();
    if (n == 0) bad();
    auto read_int = [&](bool allow_sign) -> BigInt {
        std::size_t start = i;
        if (allow_sign && i < n && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t digits_from = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits_from) bad();
        return BigInt(s.substr(start, i - start));
    };
    BigInt num = read_int(true);
    BigInt den = 1;
    if (i < n && s[i] == '/') {
        ++i;
        den = read_int(false);
        if (den == 0) bad();
    }
    if (i != n) bad();
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string out = num().str();
    if (!is_integer()) {
        out += '/';
        out += den().str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace polyent
