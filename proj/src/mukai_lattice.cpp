#include "kummerlab/mukai_lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace kummerlab {

Integer u3_pairing(const std::array<Integer, 6>& a, const std::array<Integer, 6>& b)
{
    Integer acc = 0;
    for (int plane = 0; plane < 3; ++plane) {
        const size_t e = static_cast<size_t>(2 * plane);
        acc += a[e] * b[e + 1] + a[e + 1] * b[e];
    }
    return acc;
}

Integer mukai_pairing(const MukaiVector& x, const MukaiVector& y)
{
    return u3_pairing(x.c1, y.c1) - x.r * y.s - x.s * y.r;
}

MukaiVector dual(const MukaiVector& x)
{
    MukaiVector out = x;
    for (auto& c : out.c1)
        c = -c;
    return out;
}

MukaiClassification classify(const MukaiVector& x)
{
    using boost::multiprecision::gcd;
    Integer g = x.r < 0 ? Integer(-x.r) : x.r;
    for (const auto& c : x.c1)
        g = gcd(g, c < 0 ? Integer(-c) : c);
    g = gcd(g, x.s < 0 ? Integer(-x.s) : x.s);

    MukaiClassification out;
    out.primitive = (g == 1);

    const bool c1_zero = x.c1 == std::array<Integer, 6>{};
    if (x.r > 0) {
        out.positive = true;
        out.positivity_case = 1;
    } else if (x.r == 0 && !c1_zero && x.s != 0) {
        out.positive = true;
        out.positivity_case = 2;
        out.lattice_level_effectivity = true;
    } else if (x.r == 0 && c1_zero && x.s < 0) {
        out.positive = true;
        out.positivity_case = 3;
    }
    return out;
}

MukaiVector ideal_sheaf_vector(long n)
{
    if (n < 0)
        throw std::domain_error("ideal_sheaf_vector: n must be >= 0");
    MukaiVector v;
    v.r = 1;
    v.s = -(Integer(n) + 1);
    return v;
}

ModuliDimension moduli_dimension(const MukaiVector& v)
{
    ModuliDimension out;
    out.ext_rank = mukai_pairing(v, v);
    out.dimension = out.ext_rank + 2;
    out.meets_min_dimension = out.dimension >= 8;
    return out;
}

IntegerMatrix mukai_gram_matrix()
{
    IntegerMatrix g(8, 8);
    g(0, 7) = -1;
    g(7, 0) = -1;
    for (int plane = 0; plane < 3; ++plane) {
        const int e = 1 + 2 * plane;
        g(e, e + 1) = 1;
        g(e + 1, e) = 1;
    }
    return g;
}

MukaiVector parse_mukai_vector(const std::string& text)
{
    std::vector<Integer> coords;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            coords.emplace_back(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("mukai vector: bad integer '" + token + "'");
        }
    }
    if (coords.size() != 8)
        throw std::invalid_argument("mukai vector: expected 8 comma-separated integers");
    MukaiVector v;
    v.r = coords[0];
    for (size_t i = 0; i < 6; ++i)
        v.c1[i] = coords[i + 1];
    v.s = coords[7];
    return v;
}

std::string format_mukai_vector(const MukaiVector& v)
{
    std::string s = v.r.str();
    for (const auto& c : v.c1)
        s += "," + c.str();
    return s + "," + v.s.str();
}

} // namespace kummerlab
