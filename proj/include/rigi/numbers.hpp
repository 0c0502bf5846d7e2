#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigi {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rat& r) { return sgn(r); }

// Largest square factor split: m = s^2 * f with f square-free. Inputs here are
// tiny (k-1, k^2+12, ...), trial division is plenty.
void square_free_split(long m, long& square_root_part, long& free_part);

/// a + b*sqrt(m) with m square-free and >= 0; b == 0 forces m == 0.
/// Exact sign and ordering, no floating point anywhere.
struct Quad {
    Rat a;
    Rat b;
    long m = 0;

    Quad() = default;
    Quad(Rat rational) : a(std::move(rational)) {}
    Quad(long v) : a(v) {}
    Quad(Rat a_, Rat b_, long m_);

    static Quad sqrt_of(long m);   // sqrt(m), m >= 0
    bool is_rational() const { return m == 0; }

    int sign() const;
    Quad operator-() const { return Quad(-a, -b, m); }
    Quad operator+(const Quad& o) const;
    Quad operator-(const Quad& o) const;
    Quad operator*(const Quad& o) const;
    Quad operator/(const Quad& o) const;

    bool operator==(const Quad& o) const { return (*this - o).sign() == 0; }
    bool operator<(const Quad& o) const { return (*this - o).sign() < 0; }
    bool operator>(const Quad& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const Quad& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const Quad& o) const { return (*this - o).sign() >= 0; }

    double to_double() const;
    std::string str() const;
};

}  // namespace rigi
