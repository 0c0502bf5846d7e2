#include "rigi/numbers.hpp"

#include <cmath>
#include <sstream>

namespace rigi {

void square_free_split(long m, long& square_root_part, long& free_part) {
    if (m < 0) throw std::invalid_argument("square_free_split: negative radicand");
    square_root_part = 1;
    free_part = 1;
    for (long p = 2; p * p <= m; ++p) {
        while (m % (p * p) == 0) {
            m /= p * p;
            square_root_part *= p;
        }
        if (m % p == 0) {
            m /= p;
            free_part *= p;
        }
    }
    free_part *= m;
}

Quad::Quad(Rat a_, Rat b_, long m_) : a(std::move(a_)), b(std::move(b_)), m(m_) {
    if (m < 0) throw std::invalid_argument("Quad: negative radicand");
    long s, f;
    square_free_split(m, s, f);
    if (f != m) {  // pull square factors into b
        b *= s;
        m = f;
    }
    if (m <= 1) {  // sqrt(0) = 0, sqrt(1) = 1
        a += b * (m == 1 ? 1 : 0);
        b = 0;
        m = 0;
    }
    if (b == 0) m = 0;
}

Quad Quad::sqrt_of(long radicand) { return Quad(Rat(0), Rat(1), radicand); }

int Quad::sign() const {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 * m
    Rat lhs = a * a, rhs = b * b * m;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return (c > 0) ? sa : sb;
}

Quad Quad::operator+(const Quad& o) const {
    if (m != 0 && o.m != 0 && m != o.m)
        throw std::invalid_argument("Quad: mixed radicands");
    return Quad(a + o.a, b + o.b, m != 0 ? m : o.m);
}

Quad Quad::operator-(const Quad& o) const { return *this + (-o); }

Quad Quad::operator*(const Quad& o) const {
    if (m != 0 && o.m != 0 && m != o.m)
        throw std::invalid_argument("Quad: mixed radicands");
    long mm = m != 0 ? m : o.m;
    return Quad(a * o.a + b * o.b * mm, a * o.b + b * o.a, mm);
}

Quad Quad::operator/(const Quad& o) const {
    if (o.sign() == 0) throw std::domain_error("Quad: division by zero");
    if (m != 0 && o.m != 0 && m != o.m)
        throw std::invalid_argument("Quad: mixed radicands");
    long mm = m != 0 ? m : o.m;
    // 1/(c + d sqrt(mm)) = (c - d sqrt(mm)) / (c^2 - d^2 mm)
    Rat denom = o.a * o.a - o.b * o.b * mm;
    Quad conj(o.a / denom, -o.b / denom, mm);
    return *this * conj;
}

double Quad::to_double() const {
    return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(m));
}

std::string Quad::str() const {
    std::ostringstream os;
    if (b == 0) {
        os << a;
    } else {
        os << a << (sgn(b) < 0 ? " - " : " + ") << abs(b) << "*sqrt(" << m << ")";
    }
    return os.str();
}

}  // namespace rigi
