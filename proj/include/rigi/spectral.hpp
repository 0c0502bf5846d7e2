#pragma once

#include <vector>

#include "rigi/graph.hpp"
#include "rigi/numbers.hpp"
#include "rigi/poly.hpp"

namespace rigi {

template <class T>
using Matrix = std::vector<std::vector<T>>;

using RatMatrix = Matrix<Rat>;
using QuadMatrix = Matrix<Quad>;

RatMatrix adjacency_matrix(const SimpleGraph& g);
RatMatrix adjacency_matrix(const Multigraph& g);
RatMatrix laplacian_matrix(const SimpleGraph& g);
RatMatrix laplacian_matrix(const Multigraph& g);

/// Exact signature of a symmetric matrix, with the congruence transcript.
/// `transform * M * transform^T == diagonal` holds for the original matrix M;
/// the diagonal is block diagonal with 1x1 and 2x2 blocks, whose sign counts
/// give (n_neg, n_zero, n_pos) by Sylvester's law of inertia.
template <class T>
struct InertiaCert {
    int n_neg = 0;
    int n_zero = 0;
    int n_pos = 0;
    Matrix<T> transform;
    Matrix<T> diagonal;

    bool verify(const Matrix<T>& original) const;
};

using InertiaCertificate = InertiaCert<Rat>;
using QuadInertiaCertificate = InertiaCert<Quad>;

/// Signature of (matrix - c*I) by symmetric congruence diagonalization
/// (1x1 and 2x2 pivots). Counts eigenvalues <c, =c, >c exactly.
InertiaCertificate inertia_shifted(const RatMatrix& matrix, const Rat& c);
QuadInertiaCertificate inertia_shifted_quad(const RatMatrix& matrix, const Quad& c);

/// Characteristic polynomial det(xI - M), monic, exact (Faddeev-LeVerrier).
Poly characteristic_polynomial(const RatMatrix& m);

/// Exact count of adjacency eigenvalues strictly greater than tau
/// (Sturm counting on the characteristic polynomial, with multiplicity).
int count_adjacency_eigenvalues_above(const SimpleGraph& g, const Quad& tau);

struct RamanujanVerdict {
    bool is_ramanujan = false;
    bool bipartite = false;
    int k = 0;
    InertiaCertificate certificate;  // of 4(k-1)I - A^2 at shift 0
};

/// Exact Ramanujan test for a connected k-regular graph, k >= 3:
/// every eigenvalue other than +-k has |lambda| <= 2 sqrt(k-1), decided by the
/// signature of 4(k-1)I - A^2 (one negative eigenvalue from +k, a second from
/// -k iff bipartite, everything else must be >= 0).
RamanujanVerdict is_ramanujan(const SimpleGraph& g);
/// Same convention for multigraphs, with A carrying multiplicities.
RamanujanVerdict is_ramanujan(const Multigraph& g);

/// The eigenvalue bound alone, with no connectivity requirement: every
/// adjacency eigenvalue other than +-k satisfies |lambda| <= 2 sqrt(k-1).
/// Agrees with is_ramanujan on connected graphs; disconnected k-regular
/// graphs can pass it (the Table-4 convention for vertex-transitive strata).
bool ramanujan_eigenvalue_condition(const SimpleGraph& g);

/// Exact decision mu_2(G) > tau for connected g. Rational tau goes through
/// inertia_shifted; irrational tau is decided by Sturm counting and re-verified
/// against congruence diagonalization over Q(sqrt m).
bool mu2_exceeds(const SimpleGraph& g, const Quad& tau);
bool mu2_exceeds(const Multigraph& g, const Quad& tau);

struct SpectrumSummary {
    std::vector<double> approx_adjacency_eigenvalues;  // sorted ascending
    double approx_mu2 = 0.0;
    bool is_ramanujan = false;
    bool bipartite = false;
};

/// Floating spectra for reporting only (cyclic Jacobi, off-diagonal norm of
/// at most 1e-10); never used for decisions.
std::vector<double> jacobi_eigenvalues(const std::vector<std::vector<double>>& m);
SpectrumSummary approx_spectrum(const SimpleGraph& g);

}  // namespace rigi
