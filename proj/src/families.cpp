#include "polyent/families.hpp"

#include <cctype>
#include <stdexcept>

#include "polyent/errors.hpp"

namespace polyent {

PLMap make_f0() {
    return PLMap({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
}

PLMap make_plateau() { return make_gn(1); }

PLMap make_identity() { return PLMap::identity(); }

PLMap make_gn(unsigned n) {
    if (n == 0) return PLMap::identity();
    std::vector<Breakpoint> pts;
    pts.push_back({Rational(0), Rational(0)});
    const Rational den(static_cast<long long>(n));
    for (unsigned i = 1; i <= n; ++i) {
        const Rational peak(static_cast<long long>(std::min(n, i + 1)),
                            static_cast<long long>(n));
        pts.push_back({Rational(2 * static_cast<long long>(i) - 1,
                                2 * static_cast<long long>(n)),
                       peak});
        pts.push_back({Rational(static_cast<long long>(i)) / den,
                       Rational(static_cast<long long>(i)) / den});
    }
    return PLMap(pts);
}

PLMap double_map(const PLMap& f) {
    std::vector<Breakpoint> pts;
    const Rational third(1, 3), two_thirds(2, 3);
    for (const auto& b : f.breakpoints())
        pts.push_back({b.x * third, two_thirds + b.y * third});
    pts.push_back({two_thirds, Rational(0)});
    pts.push_back({Rational(1), third});
    return PLMap(pts);
}

PLMap double_map(const PLMap& f, unsigned times) {
    PLMap g = f;
    for (unsigned i = 0; i < times; ++i) g = double_map(g);
    return g;
}

PLMap make_family(const std::string& name) {
    std::string s = name;
    unsigned doublings = 0;
    // peel "double^K(" ... ")" wrappers
    while (s.rfind("double", 0) == 0) {
        std::size_t pos = 6;
        unsigned k = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
            if (start == pos) throw ParseError("bad doubling count in '" + name + "'");
            k = static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
        }
        if (pos >= s.size() || s[pos] != '(' || s.back() != ')')
            throw ParseError("expected double^K(inner) in '" + name + "'");
        doublings += k;
        s = s.substr(pos + 1, s.size() - pos - 2);
    }

    PLMap base = [&]() {
        if (s == "f0") return make_f0();
        if (s == "plateau") return make_plateau();
        if (s == "identity" || s == "id") return make_identity();
        if (s.size() >= 2 && s[0] == 'g') {
            for (std::size_t i = 1; i < s.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(s[i])))
                    throw ParseError("unknown family '" + name + "'");
            return make_gn(static_cast<unsigned>(std::stoul(s.substr(1))));
        }
        throw ParseError("unknown family '" + name + "'");
    }();
    return double_map(base, doublings);
}

} // namespace polyent
