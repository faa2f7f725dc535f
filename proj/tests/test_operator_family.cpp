#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "specflow/eigh.hpp"
#include "specflow/operator_family.hpp"

using namespace specflow;
using specflow::testing::random_symmetric;

TEST_CASE("eigh on diagonal and 2x2 exchange matrices") {
    const EighResult d = eigh(Matrix::diagonal({3.0, -1.0, 2.0}));
    CHECK(d.eigenvalues == std::vector<double>{-1.0, 2.0, 3.0});

    Matrix x(2);
    x(0, 1) = x(1, 0) = 1.0;
    const EighResult e = eigh(x);
    CHECK(e.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigh reconstruction and orthonormality on random 50x50") {
    std::mt19937_64 rng(7);
    const Matrix a = random_symmetric(rng, 50, 5.0);
    const EighResult ed = eigh(a);
    const std::size_t n = a.dim();

    Matrix recon(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += ed.eigenvectors(i, k) * ed.eigenvalues[k] * ed.eigenvectors(j, k);
            recon(i, j) = s;
        }
    CHECK(spectral_norm(recon - a) <= 1e-10 * spectral_norm(a));

    const Matrix gram = ed.eigenvectors.transposed() * ed.eigenvectors;
    CHECK((gram - Matrix::identity(n)).max_abs() <= 1e-10);

    for (std::size_t k = 1; k < n; ++k) CHECK(ed.eigenvalues[k - 1] <= ed.eigenvalues[k]);
}

TEST_CASE("eigh is deterministic and rejects non-symmetric input") {
    std::mt19937_64 rng(8);
    const Matrix a = random_symmetric(rng, 20, 2.0);
    const EighResult e1 = eigh(a);
    const EighResult e2 = eigh(a);
    CHECK(e1.eigenvalues == e2.eigenvalues);
    CHECK(e1.eigenvectors.data()[3] == e2.eigenvectors.data()[3]);
    CHECK(eigh_values(a) == e1.eigenvalues);

    Matrix bad(2);
    bad(0, 1) = 1.0;
    bad(1, 0) = 0.5;
    CHECK_THROWS_AS(eigh(bad), std::invalid_argument);
    CHECK_THROWS_AS(eigh_values(bad), std::invalid_argument);
}

TEST_CASE("power-iteration spectral norm agrees with eigh") {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 5; ++round) {
        const Matrix a = random_symmetric(rng, 12, 3.0);
        const auto eigs = eigh_values(a);
        const double expect = std::max(std::fabs(eigs.front()), std::fabs(eigs.back()));
        CHECK(spectral_norm(a) == doctest::Approx(expect).epsilon(1e-8));
    }
}

TEST_CASE("Weyl perturbation bound on random pairs") {
    std::mt19937_64 rng(10);
    for (int round = 0; round < 20; ++round) {
        const std::size_t n = 2 + rng() % 12;
        const Matrix a = random_symmetric(rng, n, 2.0);
        const Matrix b = random_symmetric(rng, n, 2.0);
        const auto la = eigh_values(a);
        const auto lb = eigh_values(b);
        double max_gap = 0.0;
        for (std::size_t i = 0; i < n; ++i) max_gap = std::max(max_gap, std::fabs(la[i] - lb[i]));
        CHECK(max_gap <= spectral_norm(a - b) + 1e-8);
    }
}

TEST_CASE("linear_family endpoints, constant case, midpoint") {
    const Matrix a0 = Matrix::diagonal({0.0, 2.0});
    const Matrix a1 = Matrix::diagonal({2.0, 0.0});
    const OperatorFamily f = linear_family(a0, a1);
    CHECK((f(0.0) - a0).max_abs() == 0.0);
    CHECK((f(1.0) - a1).max_abs() == 0.0);
    CHECK((f(0.5) - Matrix::diagonal({1.0, 1.0})).max_abs() <= 1e-15);

    const OperatorFamily c = linear_family(a0, a0);
    CHECK(c.derivative(0.3).max_abs() == 0.0);

    CHECK_THROWS_AS(linear_family(Matrix(2), Matrix(3)), std::invalid_argument);
}

TEST_CASE("finite-difference derivative matches the exact one for linear families") {
    std::mt19937_64 rng(11);
    const Matrix a0 = random_symmetric(rng, 6, 1.0);
    const Matrix a1 = random_symmetric(rng, 6, 1.0);
    const OperatorFamily exact = linear_family(a0, a1);
    const OperatorFamily fd = OperatorFamily::with_fd_derivative(
        {0.0, 1.0}, 6, [a0, a1](double t) { return a0 * (1.0 - t) + a1 * t; });
    for (double t : {0.0, 0.25, 0.5, 0.99, 1.0})
        CHECK((fd.derivative(t) - exact.derivative(t)).max_abs() <= 1e-4);
}

TEST_CASE("sample_spectrum anchors the canonical window") {
    const OperatorFamily f = linear_family(Matrix::diagonal({-1.0, 1.0}), Matrix::diagonal({-1.0, 1.0}));
    const SpectrumWindow w = sample_spectrum(f, 0.7);
    CHECK(w.index_lo() == -1);
    CHECK(w.at(-1) == -1.0);
    CHECK(w.at(0) == 1.0);

    // crossing family: the smallest nonnegative eigenvalue moves to index 0
    const OperatorFamily g = linear_family(Matrix::diagonal({-0.5, 2.0}), Matrix::diagonal({0.5, 2.0}));
    const SpectrumWindow before = sample_spectrum(g, 0.4);
    CHECK(before.index_lo() == -1);
    CHECK(before.at(-1) == doctest::Approx(-0.1).epsilon(1e-12));
    CHECK(before.at(0) == doctest::Approx(2.0).epsilon(1e-12));
    const SpectrumWindow at_mid = sample_spectrum(g, 0.5);
    CHECK(at_mid.index_lo() == 0);  // exact 0 anchors at index 0
    const SpectrumWindow after = sample_spectrum(g, 0.6);
    CHECK(after.index_lo() == 0);
    CHECK(after.at(0) == doctest::Approx(0.1).epsilon(1e-12));

    CHECK_THROWS_AS(sample_spectrum(g, 1.5), std::invalid_argument);
}
