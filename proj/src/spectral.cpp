#include "rigi/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace rigi {

RatMatrix adjacency_matrix(const SimpleGraph& g) {
    int n = g.vertex_count();
    RatMatrix a(n, std::vector<Rat>(n, Rat(0)));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

RatMatrix adjacency_matrix(const Multigraph& g) {
    int n = g.vertex_count();
    RatMatrix a(n, std::vector<Rat>(n, Rat(0)));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) a[u][v] = g.multiplicity(u, v);
    return a;
}

namespace {
RatMatrix laplacian_of(RatMatrix a) {
    int n = static_cast<int>(a.size());
    for (int u = 0; u < n; ++u) {
        Rat deg(0);
        for (int v = 0; v < n; ++v) deg += a[u][v];
        for (int v = 0; v < n; ++v) a[u][v] = -a[u][v];
        a[u][u] = deg;
    }
    return a;
}
}  // namespace

RatMatrix laplacian_matrix(const SimpleGraph& g) { return laplacian_of(adjacency_matrix(g)); }
RatMatrix laplacian_matrix(const Multigraph& g) { return laplacian_of(adjacency_matrix(g)); }

// ---- congruence diagonalization ---------------------------------------------

namespace {

template <class T>
bool is_zero(const T& x) {
    if constexpr (std::is_same_v<T, Rat>)
        return x == 0;
    else
        return x.sign() == 0;
}

template <class T>
int sign_val(const T& x) {
    if constexpr (std::is_same_v<T, Rat>)
        return sgn(x);
    else
        return x.sign();
}

template <class T>
InertiaCert<T> diagonalize(Matrix<T> m) {
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(is_zero(static_cast<T>(m[i][j] - m[j][i]))))
                throw std::invalid_argument("inertia: matrix not symmetric");

    InertiaCert<T> cert;
    Matrix<T>& a = m;
    Matrix<T> e(n, std::vector<T>(n, T(Rat(0))));
    for (int i = 0; i < n; ++i) e[i][i] = T(Rat(1));

    auto swap_rc = [&](int i, int j) {
        std::swap(a[i], a[j]);
        for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
        std::swap(e[i], e[j]);
    };
    // row r -= f * row s, together with the matching column operation
    auto eliminate = [&](int r, int s, const T& f) {
        for (int c = 0; c < n; ++c) a[r][c] = a[r][c] - f * a[s][c];
        for (int c = 0; c < n; ++c) a[c][r] = a[c][r] - f * a[c][s];
        for (int c = 0; c < n; ++c) e[r][c] = e[r][c] - f * e[s][c];
    };

    int i = 0;
    while (i < n) {
        if (!is_zero(a[i][i])) {
            for (int r = i + 1; r < n; ++r)
                if (!is_zero(a[r][i])) eliminate(r, i, a[r][i] / a[i][i]);
            int s = sign_val(a[i][i]);
            (s > 0 ? cert.n_pos : cert.n_neg)++;
            ++i;
            continue;
        }
        int dpivot = -1, opivot = -1;
        for (int j = i + 1; j < n && dpivot < 0; ++j)
            if (!is_zero(a[j][j])) dpivot = j;
        if (dpivot >= 0) {
            swap_rc(i, dpivot);
            continue;
        }
        for (int j = i + 1; j < n && opivot < 0; ++j)
            if (!is_zero(a[i][j])) opivot = j;
        if (opivot < 0) {  // whole row/column is zero
            cert.n_zero++;
            ++i;
            continue;
        }
        // 2x2 pivot on the block [[0, q], [q, 0]]; one positive and one
        // negative eigenvalue regardless of q != 0
        swap_rc(i + 1, opivot);
        T q = a[i][i + 1];
        for (int r = i + 2; r < n; ++r) {
            T fi = a[r][i + 1] / q;  // clears column i
            T fj = a[r][i] / q;      // clears column i+1
            for (int c = 0; c < n; ++c) a[r][c] = a[r][c] - fi * a[i][c] - fj * a[i + 1][c];
            for (int c = 0; c < n; ++c) a[c][r] = a[c][r] - fi * a[c][i] - fj * a[c][i + 1];
            for (int c = 0; c < n; ++c) e[r][c] = e[r][c] - fi * e[i][c] - fj * e[i + 1][c];
        }
        cert.n_pos++;
        cert.n_neg++;
        i += 2;
    }
    cert.transform = std::move(e);
    cert.diagonal = std::move(a);
    return cert;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& x, const Matrix<T>& y) {
    int n = static_cast<int>(x.size());
    Matrix<T> r(n, std::vector<T>(n, T(Rat(0))));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (is_zero(x[i][k])) continue;
            for (int j = 0; j < n; ++j) r[i][j] = r[i][j] + x[i][k] * y[k][j];
        }
    return r;
}

template <class T>
Matrix<T> mat_transpose(const Matrix<T>& x) {
    int n = static_cast<int>(x.size());
    Matrix<T> r(n, std::vector<T>(n, T(Rat(0))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[j][i] = x[i][j];
    return r;
}

}  // namespace

template <class T>
bool InertiaCert<T>::verify(const Matrix<T>& original) const {
    int n = static_cast<int>(original.size());
    if (n_neg + n_zero + n_pos != n) return false;
    Matrix<T> lhs = mat_mul(mat_mul(transform, original), mat_transpose(transform));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!is_zero(static_cast<T>(lhs[i][j] - diagonal[i][j]))) return false;
    // recount signs off the recorded block diagonal
    int neg = 0, zero = 0, pos = 0, i = 0;
    std::vector<bool> block_start(n, false);
    while (i < n) {
        if (i + 1 < n && !is_zero(diagonal[i][i + 1])) {
            if (!is_zero(diagonal[i][i]) || !is_zero(diagonal[i + 1][i + 1])) return false;
            block_start[i] = true;
            ++neg;
            ++pos;
            i += 2;
            continue;
        }
        int s = sign_val(diagonal[i][i]);
        if (s > 0)
            ++pos;
        else if (s < 0)
            ++neg;
        else
            ++zero;
        ++i;
    }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (r == c || is_zero(diagonal[r][c])) continue;
            bool in_block = (c == r + 1 && block_start[r]) || (r == c + 1 && block_start[c]);
            if (!in_block) return false;
        }
    return neg == n_neg && zero == n_zero && pos == n_pos;
}

template struct InertiaCert<Rat>;
template struct InertiaCert<Quad>;

InertiaCertificate inertia_shifted(const RatMatrix& matrix, const Rat& c) {
    RatMatrix m = matrix;
    for (size_t i = 0; i < m.size(); ++i) m[i][i] -= c;
    return diagonalize(std::move(m));
}

QuadInertiaCertificate inertia_shifted_quad(const RatMatrix& matrix, const Quad& c) {
    int n = static_cast<int>(matrix.size());
    QuadMatrix m(n, std::vector<Quad>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Quad(matrix[i][j]);
    for (int i = 0; i < n; ++i) m[i][i] = m[i][i] - c;
    return diagonalize(std::move(m));
}

// ---- characteristic polynomial -----------------------------------------------

Poly characteristic_polynomial(const RatMatrix& m) {
    int n = static_cast<int>(m.size());
    Poly coeffs(n + 1, Rat(0));
    coeffs[n] = 1;
    RatMatrix work(n, std::vector<Rat>(n, Rat(0)));  // M_k of Faddeev-LeVerrier
    for (int i = 0; i < n; ++i) work[i][i] = 1;
    Rat c(0);
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            for (int i = 0; i < n; ++i) work[i][i] += c;
            RatMatrix next(n, std::vector<Rat>(n, Rat(0)));
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) {
                    if (m[i][l] == 0) continue;
                    for (int j = 0; j < n; ++j) next[i][j] += m[i][l] * work[l][j];
                }
            work = std::move(next);
        } else {
            work = m;
        }
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += work[i][i];
        c = -tr / k;
        coeffs[n - k] = c;
    }
    return coeffs;
}

// ---- graph-level decisions ----------------------------------------------------

int count_adjacency_eigenvalues_above(const SimpleGraph& g, const Quad& tau) {
    if (g.vertex_count() == 0) return 0;
    return count_roots_above(characteristic_polynomial(adjacency_matrix(g)), tau);
}

namespace {

template <class G>
RamanujanVerdict ramanujan_impl(const G& g, bool bip) {
    auto kreg = regular_degree(g);
    if (!kreg || *kreg < 3) throw std::domain_error("is_ramanujan: not k-regular with k >= 3");
    if (!is_connected(g)) throw std::domain_error("is_ramanujan: disconnected graph");
    int k = *kreg;

    RatMatrix a = adjacency_matrix(g);
    int n = static_cast<int>(a.size());
    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < n; ++j) m[i][j] -= a[i][l] * a[l][j];
        }
    for (int i = 0; i < n; ++i) m[i][i] += 4 * (k - 1);

    RamanujanVerdict verdict;
    verdict.k = k;
    verdict.bipartite = bip;
    verdict.certificate = inertia_shifted(m, Rat(0));
    verdict.is_ramanujan = verdict.certificate.n_neg == (bip ? 2 : 1);
    return verdict;
}

}  // namespace

RamanujanVerdict is_ramanujan(const SimpleGraph& g) {
    return ramanujan_impl(g, is_bipartite(g));
}

RamanujanVerdict is_ramanujan(const Multigraph& g) {
    return ramanujan_impl(g, is_bipartite(g.support()));
}

bool ramanujan_eigenvalue_condition(const SimpleGraph& g) {
    auto kreg = regular_degree(g);
    if (!kreg || *kreg < 3)
        throw std::domain_error("ramanujan_eigenvalue_condition: not k-regular with k >= 3");
    int k = *kreg;
    RatMatrix a = adjacency_matrix(g);
    int n = static_cast<int>(a.size());
    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < n; ++j) m[i][j] -= a[i][l] * a[l][j];
        }
    for (int i = 0; i < n; ++i) m[i][i] += 4 * (k - 1);
    int trivial = inertia_shifted(a, Rat(k)).n_zero + inertia_shifted(a, Rat(-k)).n_zero;
    return inertia_shifted(m, Rat(0)).n_neg == trivial;
}

namespace {

template <class G>
bool mu2_exceeds_impl(const G& g, const Quad& tau) {
    if (!is_connected(g)) throw std::domain_error("mu2_exceeds: disconnected graph");
    if (g.vertex_count() < 2) throw std::domain_error("mu2_exceeds: need n >= 2");
    if (tau.sign() < 0) return true;
    if (tau.sign() == 0) return true;  // mu2 > 0 iff connected
    RatMatrix lap = laplacian_matrix(g);
    if (tau.is_rational()) {
        auto cert = inertia_shifted(lap, tau.a);
        return cert.n_neg == 1 && cert.n_zero == 0;
    }
    Poly p = characteristic_polynomial(lap);
    bool by_sturm =
        count_roots_below(p, tau) == 1 && root_multiplicity(p, tau) == 0;
    auto cert = inertia_shifted_quad(lap, tau);
    bool by_inertia = cert.n_neg == 1 && cert.n_zero == 0;
    if (by_sturm != by_inertia)
        throw std::logic_error("mu2_exceeds: Sturm and inertia paths disagree");
    return by_sturm;
}

}  // namespace

bool mu2_exceeds(const SimpleGraph& g, const Quad& tau) { return mu2_exceeds_impl(g, tau); }
bool mu2_exceeds(const Multigraph& g, const Quad& tau) { return mu2_exceeds_impl(g, tau); }

// ---- floating spectra ----------------------------------------------------------

std::vector<double> jacobi_eigenvalues(const std::vector<std::vector<double>>& m0) {
    auto m = m0;
    int n = static_cast<int>(m.size());
    auto off = [&]() {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += m[i][j] * m[i][j];
        return std::sqrt(s);
    };
    for (int sweep = 0; sweep < 100 && off() > 1e-10; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(m[p][q]) < 1e-18) continue;
                double theta = (m[q][q] - m[p][p]) / (2 * m[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int i = 0; i < n; ++i) {
                    double mip = m[i][p], miq = m[i][q];
                    m[i][p] = c * mip - s * miq;
                    m[i][q] = s * mip + c * miq;
                }
                for (int i = 0; i < n; ++i) {
                    double mpi = m[p][i], mqi = m[q][i];
                    m[p][i] = c * mpi - s * mqi;
                    m[q][i] = s * mpi + c * mqi;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = m[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

namespace {
std::vector<std::vector<double>> to_double(const RatMatrix& m) {
    std::vector<std::vector<double>> d(m.size(), std::vector<double>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) d[i][j] = m[i][j].get_d();
    return d;
}
}  // namespace

SpectrumSummary approx_spectrum(const SimpleGraph& g) {
    SpectrumSummary s;
    s.bipartite = is_bipartite(g);
    if (g.vertex_count() > 0)
        s.approx_adjacency_eigenvalues = jacobi_eigenvalues(to_double(adjacency_matrix(g)));
    if (g.vertex_count() >= 2) {
        auto mu = jacobi_eigenvalues(to_double(laplacian_matrix(g)));
        s.approx_mu2 = mu[1];
    }
    auto kreg = regular_degree(g);
    if (kreg && *kreg >= 3 && is_connected(g)) s.is_ramanujan = is_ramanujan(g).is_ramanujan;
    return s;
}

}  // namespace rigi
