#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rigi/graph.hpp"
#include "rigi/poly.hpp"
#include "rigi/spectral.hpp"

using namespace rigi;

TEST_CASE("inertia of fixed matrices") {
    // L(K4) PSD with a single zero eigenvalue
    auto c = inertia_shifted(laplacian_matrix(complete_graph(4)), Rat(0));
    CHECK(c.n_neg == 0);
    CHECK(c.n_zero == 1);
    CHECK(c.n_pos == 3);
    CHECK(c.verify(laplacian_matrix(complete_graph(4))));

    // A(K4) spectrum {3, -1, -1, -1}: shift by -1
    auto c2 = inertia_shifted(adjacency_matrix(complete_graph(4)), Rat(-1));
    CHECK(c2.n_neg == 0);
    CHECK(c2.n_zero == 3);
    CHECK(c2.n_pos == 1);

    // L(C4) spectrum {0, 2, 2, 4}: shift by 2
    auto c3 = inertia_shifted(laplacian_matrix(cycle_graph(4)), Rat(2));
    CHECK(c3.n_neg == 1);
    CHECK(c3.n_zero == 2);
    CHECK(c3.n_pos == 1);
    CHECK(c3.verify([] {
        auto l = laplacian_matrix(cycle_graph(4));
        for (int i = 0; i < 4; ++i) l[i][i] -= 2;
        return l;
    }()));

    RatMatrix bad = {{Rat(0), Rat(1)}, {Rat(2), Rat(0)}};
    CHECK_THROWS_AS(inertia_shifted(bad, Rat(0)), std::invalid_argument);
}

TEST_CASE("inertia matches Sturm root counts on random rational matrices") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + static_cast<int>(rng() % 8);
        RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Rat v = make_rat(static_cast<long>(rng() % 11) - 5,
                                 1 + static_cast<long>(rng() % 3));
                m[i][j] = m[j][i] = v;
            }
        long shift_num = static_cast<long>(rng() % 7) - 3;
        Rat c = make_rat(shift_num, 2);
        auto cert = inertia_shifted(m, c);
        CHECK(cert.verify([&] {
            auto s = m;
            for (int i = 0; i < n; ++i) s[i][i] -= c;
            return s;
        }()));
        Poly p = characteristic_polynomial(m);
        CHECK(cert.n_neg == count_roots_below(p, Quad(c)));
        CHECK(cert.n_zero == root_multiplicity(p, Quad(c)));
        CHECK(cert.n_pos == count_roots_above(p, Quad(c)));
    }
}

TEST_CASE("characteristic polynomial fixed cases") {
    // det(xI - A(K4)) = x^4 - 6x^2 - 8x - 3
    Poly p = characteristic_polynomial(adjacency_matrix(complete_graph(4)));
    Poly expect = {Rat(-3), Rat(-8), Rat(-6), Rat(0), Rat(1)};
    CHECK(p == expect);

    // 5x5 hand case: A(C5) -> x^5 - 5x^3 + 5x - 2
    Poly pc5 = characteristic_polynomial(adjacency_matrix(cycle_graph(5)));
    Poly expect_c5 = {Rat(-2), Rat(5), Rat(0), Rat(-5), Rat(0), Rat(1)};
    CHECK(pc5 == expect_c5);
}

TEST_CASE("count adjacency eigenvalues above tau") {
    // Petersen spectrum {3, 1^5, (-2)^4}
    SimpleGraph pet = petersen_graph();
    CHECK(count_adjacency_eigenvalues_above(pet, Quad(Rat(0), Rat(2), 2)) == 1);
    CHECK(count_adjacency_eigenvalues_above(pet, Quad(Rat(1))) == 1);
    CHECK(count_adjacency_eigenvalues_above(pet, Quad(make_rat(1, 2))) == 6);
    CHECK(count_adjacency_eigenvalues_above(pet, Quad(Rat(-2))) == 6);
    CHECK(count_adjacency_eigenvalues_above(pet, Quad(Rat(-3))) == 10);
    CHECK(count_adjacency_eigenvalues_above(complete_graph(4), Quad(Rat(0))) == 1);

    // monotone in tau
    std::mt19937 rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) es.emplace_back(u, v);
        SimpleGraph g = SimpleGraph::from_edges(n, es);
        int last = count_adjacency_eigenvalues_above(g, Quad(Rat(-n)));
        for (long t = -2 * n; t <= 2 * n; ++t) {
            int now = count_adjacency_eigenvalues_above(g, Quad(make_rat(t, 2)));
            CHECK(now <= last);
            last = now;
        }
    }
}

TEST_CASE("ramanujan certification") {
    auto k4 = is_ramanujan(complete_graph(4));
    CHECK(k4.is_ramanujan);
    CHECK_FALSE(k4.bipartite);
    CHECK(k4.certificate.n_neg == 1);

    auto pet = is_ramanujan(petersen_graph());
    CHECK(pet.is_ramanujan);

    auto k33 = is_ramanujan(complete_bipartite(3, 3));
    CHECK(k33.is_ramanujan);
    CHECK(k33.bipartite);
    CHECK(k33.certificate.n_neg == 2);

    // C16 x K2 prism: lambda_2 = 2cos(pi/8) + 1 > 2 sqrt 2
    auto pr = is_ramanujan(prism(16));
    CHECK_FALSE(pr.is_ramanujan);

    CHECK_THROWS_AS(is_ramanujan(cycle_graph(5)), std::domain_error);
    CHECK_THROWS_AS(is_ramanujan(disjoint_union(complete_graph(4), complete_graph(4))),
                    std::domain_error);
}

TEST_CASE("ramanujan agrees with float oracle on small regular graphs") {
    // float oracle: max |lambda_i| over non +-k eigenvalues vs 2 sqrt(k-1)
    auto float_check = [](const SimpleGraph& g, int k) {
        auto ev = approx_spectrum(g).approx_adjacency_eigenvalues;
        double worst = 0;
        for (double l : ev) {
            if (std::fabs(std::fabs(l) - k) < 1e-7) continue;
            worst = std::max(worst, std::fabs(l));
        }
        return worst - 2 * std::sqrt(k - 1.0);
    };
    std::vector<SimpleGraph> graphs = {complete_graph(4),  petersen_graph(),
                                       prism(3),           prism(16),
                                       complete_graph(8),  complete_bipartite(4, 4),
                                       cycle_graph(7).complement()};
    for (const auto& g : graphs) {
        int k = *regular_degree(g);
        double margin = float_check(g, k);
        bool exact = is_ramanujan(g).is_ramanujan;
        if (margin < -1e-6) CHECK(exact);
        if (margin > 1e-6) CHECK_FALSE(exact);
    }
}

TEST_CASE("mu2_exceeds") {
    CHECK(mu2_exceeds(complete_graph(7), Quad(make_rat(11, 5))));  // mu2(K7) = 7
    CHECK(mu2_exceeds(cycle_graph(5), Quad(Rat(1))));              // mu2(C5) ~ 1.382
    CHECK_FALSE(mu2_exceeds(cycle_graph(5), Quad(make_rat(3, 2))));
    // exact boundary: mu2(C4) = 2 is not > 2
    CHECK_FALSE(mu2_exceeds(cycle_graph(4), Quad(Rat(2))));
    CHECK(mu2_exceeds(cycle_graph(4), Quad(make_rat(199, 100))));
    // irrational threshold: mu2(C5) = (5 - sqrt 5)/2 vs values either side
    Quad mu2_c5(make_rat(5, 2), make_rat(-1, 2), 5);
    CHECK_FALSE(mu2_exceeds(cycle_graph(5), mu2_c5));
    CHECK(mu2_exceeds(cycle_graph(5), mu2_c5 - Quad(make_rat(1, 1000))));
    CHECK_FALSE(mu2_exceeds(cycle_graph(5), mu2_c5 + Quad(make_rat(1, 1000))));
    // petersen: mu2 = 2, test at 2 sqrt(2) - 1 < 2 and sqrt(5) > 2
    CHECK(mu2_exceeds(petersen_graph(), Quad(Rat(-1), Rat(2), 2)));
    CHECK_FALSE(mu2_exceeds(petersen_graph(), Quad::sqrt_of(5)));

    CHECK_THROWS_AS(mu2_exceeds(disjoint_union(cycle_graph(3), cycle_graph(3)), Quad(Rat(1))),
                    std::domain_error);
}

TEST_CASE("approx spectrum") {
    auto k4 = approx_spectrum(complete_graph(4));
    REQUIRE(k4.approx_adjacency_eigenvalues.size() == 4);
    CHECK(k4.approx_adjacency_eigenvalues[3] == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(k4.approx_adjacency_eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-8));
    CHECK(k4.approx_mu2 == doctest::Approx(4.0).epsilon(1e-8));
    CHECK(k4.is_ramanujan);

    auto pet = approx_spectrum(petersen_graph());
    CHECK(pet.approx_adjacency_eigenvalues[9] == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(pet.approx_adjacency_eigenvalues[0] == doctest::Approx(-2.0).epsilon(1e-8));
    CHECK(pet.approx_mu2 == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("poly helpers") {
    // (x-1)^2 (x+2)
    Poly p = poly_mul(poly_mul(Poly{Rat(-1), Rat(1)}, Poly{Rat(-1), Rat(1)}),
                      Poly{Rat(2), Rat(1)});
    CHECK(count_roots_above(p, Quad(Rat(0))) == 2);
    CHECK(root_multiplicity(p, Quad(Rat(1))) == 2);
    CHECK(root_multiplicity(p, Quad(Rat(-2))) == 1);
    CHECK(count_roots_below(p, Quad(Rat(1))) == 1);
    CHECK(poly_divides(Poly{Rat(-1), Rat(1)}, p));
    CHECK_FALSE(poly_divides(Poly{Rat(-3), Rat(1)}, p));
    auto sq = squarefree_decomposition(p);
    REQUIRE(sq.size() == 2);
    CHECK(poly_degree(sq[0]) == 1);  // (x+2)
    CHECK(poly_degree(sq[1]) == 1);  // (x-1)
    // x^2 - 2 has sqrt(2) as a root
    CHECK(root_multiplicity(Poly{Rat(-2), Rat(0), Rat(1)}, Quad::sqrt_of(2)) == 1);
}
