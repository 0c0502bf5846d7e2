#include "rigi/poly.hpp"

#include <algorithm>

namespace rigi {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool poly_is_zero(const Poly& p) { return poly_trim(p).empty(); }

int poly_degree(const Poly& p) { return static_cast<int>(poly_trim(p).size()) - 1; }

Poly poly_neg(const Poly& p) {
    Poly r = p;
    for (auto& c : r) c = -c;
    return r;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(r);
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_mul(const Poly& a, const Poly& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(r);
}

Poly poly_scale(const Poly& a, const Rat& c) {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    Poly rem = poly_trim(a), div = poly_trim(b);
    if (div.empty()) throw std::domain_error("poly_divmod: division by zero");
    Poly quot(rem.size() > div.size() - 1 ? rem.size() - div.size() + 1 : 0, Rat(0));
    while (rem.size() >= div.size()) {
        Rat c = rem.back() / div.back();
        size_t shift = rem.size() - div.size();
        quot[shift] = c;
        for (size_t i = 0; i < div.size(); ++i) rem[shift + i] -= c * div[i];
        rem = poly_trim(rem);
        if (rem.empty()) break;
    }
    return {poly_trim(quot), rem};
}

bool poly_divides(const Poly& b, const Poly& a) {
    return poly_is_zero(poly_divmod(a, b).second);
}

Poly poly_derivative(const Poly& p) {
    Poly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<long>(i));
    return poly_trim(r);
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(a);
    b = poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    if (!a.empty()) a = poly_scale(a, Rat(1) / a.back());
    return a;
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Quad poly_eval(const Poly& p, const Quad& x) {
    Quad acc(Rat(0));
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Quad(*it);
    return acc;
}

std::vector<Poly> squarefree_decomposition(const Poly& p0) {
    std::vector<Poly> out;
    Poly p = poly_trim(p0);
    if (poly_degree(p) < 1) return out;
    Poly dp = poly_derivative(p);
    Poly a = poly_gcd(p, dp);
    Poly b = poly_divmod(p, a).first;
    Poly c = poly_divmod(dp, a).first;
    Poly d = poly_sub(c, poly_derivative(b));
    while (true) {
        Poly g = poly_gcd(b, d);
        out.push_back(g);
        b = poly_divmod(b, g).first;
        if (poly_degree(b) < 1) break;
        c = poly_divmod(d, g).first;
        d = poly_sub(c, poly_derivative(b));
    }
    return out;
}

SturmChain::SturmChain(const Poly& p) {
    Poly a = poly_trim(p);
    if (a.empty()) throw std::domain_error("SturmChain: zero polynomial");
    chain.push_back(a);
    Poly b = poly_derivative(a);
    while (!poly_is_zero(b)) {
        chain.push_back(b);
        Poly r = poly_neg(poly_divmod(a, b).second);
        a = b;
        b = r;
    }
}

namespace {
int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}
}  // namespace

int SturmChain::variations_at(const Quad& x) const {
    std::vector<int> signs;
    for (const auto& p : chain) signs.push_back(poly_eval(p, x).sign());
    return count_variations(signs);
}

int SturmChain::variations_at_plus_infinity() const {
    std::vector<int> signs;
    for (const auto& p : chain) signs.push_back(sgn(p.back()));
    return count_variations(signs);
}

int SturmChain::variations_at_minus_infinity() const {
    std::vector<int> signs;
    for (const auto& p : chain)
        signs.push_back(poly_degree(p) % 2 == 0 ? sgn(p.back()) : -sgn(p.back()));
    return count_variations(signs);
}

namespace {
int count_distinct_above(const Poly& p, const Quad& tau) {
    if (poly_degree(p) < 1) return 0;
    SturmChain s(p);
    return s.variations_at(tau) - s.variations_at_plus_infinity();
}
int count_distinct_below(const Poly& p, const Quad& tau) {
    // (-inf, tau) = (-inf, tau] minus a root at tau itself
    if (poly_degree(p) < 1) return 0;
    SturmChain s(p);
    int le = s.variations_at_minus_infinity() - s.variations_at(tau);
    int at = poly_eval(p, tau).sign() == 0 ? 1 : 0;
    return le - at;
}
}  // namespace

int count_roots_above(const Poly& p, const Quad& tau) {
    int total = 0, mult = 1;
    for (const auto& q : squarefree_decomposition(p)) {
        total += mult * count_distinct_above(q, tau);
        ++mult;
    }
    return total;
}

int count_roots_below(const Poly& p, const Quad& tau) {
    int total = 0, mult = 1;
    for (const auto& q : squarefree_decomposition(p)) {
        total += mult * count_distinct_below(q, tau);
        ++mult;
    }
    return total;
}

int root_multiplicity(const Poly& p, const Quad& tau) {
    int total = 0, mult = 1;
    for (const auto& q : squarefree_decomposition(p)) {
        if (poly_degree(q) >= 1 && poly_eval(q, tau).sign() == 0) total += mult;
        ++mult;
    }
    return total;
}

}  // namespace rigi
