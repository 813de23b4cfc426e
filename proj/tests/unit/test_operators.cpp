#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "rdnet/operators.hpp"
#include "support/oracles.hpp"

using namespace rdnet;

namespace {

Operators ops_for(const SimplicialComplex& K) {
    return build_operators(K, circumcentric_dual(K));
}

}  // namespace

TEST_CASE("hodge star 0") {
    SUBCASE("1-D chain") {
        const SimplicialComplex K = interval_mesh(3, 2.0);
        const Vector star0 = ops_for(K).star0;
        CHECK(star0(0) == doctest::Approx(0.5));
        CHECK(star0(1) == doctest::Approx(1.0));
        CHECK(star0(2) == doctest::Approx(0.5));
    }
    SUBCASE("strictly positive everywhere") {
        CHECK((ops_for(fig1_mesh()).star0.array() > 0.0).all());
        CHECK((ops_for(equilateral_strip(2, 2, 1.0)).star0.array() > 0.0).all());
    }
    SUBCASE("scaling homogeneity of degree n") {
        const double lambda = 2.75;
        const SimplicialComplex K = fig1_mesh();
        SimplicialComplex scaled = K;
        scaled.vertices *= lambda;
        const SimplicialComplex K2 = build_complex(scaled.vertices, scaled.cells);
        const Vector s1 = ops_for(K).star0, s2 = ops_for(K2).star0;
        for (Index k = 0; k < s1.size(); ++k)
            CHECK(s2(k) == doctest::Approx(lambda * lambda * s1(k)).epsilon(1e-12));

        const SimplicialComplex I1 = interval_mesh(4, 1.0), I2 = interval_mesh(4, lambda);
        const Vector t1 = ops_for(I1).star0, t2 = ops_for(I2).star0;
        for (Index k = 0; k < t1.size(); ++k)
            CHECK(t2(k) == doctest::Approx(lambda * t1(k)).epsilon(1e-12));
    }
}

TEST_CASE("hodge star 1") {
    SUBCASE("1-D spacing h gives 1/h") {
        const SimplicialComplex K = interval_mesh(5, 2.0);  // h = 0.5
        CHECK((ops_for(K).star1.array() - 2.0).abs().maxCoeff() <= 1e-14);
    }
    SUBCASE("shared edge of the equilateral pair") {
        const SimplicialComplex K = fig1_mesh();
        const Operators ops = ops_for(K);
        // Edge (0,1) is the interior edge: 2 * (s / 2 sqrt 3) / s = 1/sqrt 3.
        REQUIRE((K.edges[0] == std::array<int, 2>{0, 1}));
        CHECK(ops.star1(0) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
        for (Index e = 1; e < K.num_edges(); ++e)
            CHECK(ops.star1(e) == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-12));
    }
    SUBCASE("invariance under rigid motion") {
        const SimplicialComplex K = fig1_mesh();
        const double phi = 0.7;
        Matrix rot(2, 2);
        rot << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
        Matrix moved = K.vertices * rot.transpose();
        moved.rowwise() += Eigen::RowVector2d(3.0, -1.5);
        const SimplicialComplex K2 = build_complex(moved, K.cells);
        const Vector s1 = ops_for(K).star1, s2 = ops_for(K2).star1;
        CHECK((s1 - s2).lpNorm<Eigen::Infinity>() <= 1e-12);
    }
}

TEST_CASE("exterior derivative") {
    const SimplicialComplex K = interval_mesh(3, 2.0);
    const SparseMatrix d = exterior_derivative_0(K);
    SUBCASE("differences of samples") {
        Vector u(3);
        u << 0.0, 1.0, 3.0;
        const Vector du = d * u;
        CHECK(du(0) == 1.0);
        CHECK(du(1) == 2.0);
    }
    SUBCASE("constants are annihilated") {
        CHECK((d * Vector::Constant(3, 4.2)).lpNorm<Eigen::Infinity>() == 0.0);
        const SparseMatrix d2 = exterior_derivative_0(fig1_mesh());
        CHECK((d2 * Vector::Ones(4)).lpNorm<Eigen::Infinity>() == 0.0);
    }
    SUBCASE("one +1 and one -1 per row") {
        const Matrix dense = Matrix(d);
        for (Index e = 0; e < dense.rows(); ++e) {
            CHECK(dense.row(e).sum() == 0.0);
            CHECK(dense.row(e).cwiseAbs().sum() == 2.0);
        }
    }
}

TEST_CASE("trace operator") {
    SUBCASE("selects boundary values in ascending order") {
        const SimplicialComplex K = interval_mesh(3, 2.0);
        const SparseMatrix tr = trace_operator(K);
        Vector u(3);
        u << 7.0, -1.0, 9.0;
        const Vector b = tr * u;
        REQUIRE(b.size() == 2);
        CHECK(b(0) == 7.0);
        CHECK(b(1) == 9.0);
        CHECK((tr * Vector::Ones(3) - Vector::Ones(2)).lpNorm<Eigen::Infinity>() == 0.0);
    }
    SUBCASE("closed complex has an empty trace") {
        Matrix vertices(3, 1);
        vertices << 0.0, 1.0, 2.0;
        const SimplicialComplex cycle = build_complex(vertices, {{0, 1}, {1, 2}, {2, 0}});
        CHECK(trace_operator(cycle).rows() == 0);
    }
}

TEST_CASE("1-D Laplacian is the standard second difference") {
    const SimplicialComplex K = interval_mesh(3, 2.0);
    const Operators ops = ops_for(K);
    const SparseMatrix delta = laplacian(K, ops, Vector::Ones(K.num_edges()));
    Matrix expected(3, 3);
    expected << 1, -1, 0,
                -1, 2, -1,
                0, -1, 1;
    CHECK((Matrix(delta) - expected).lpNorm<Eigen::Infinity>() == 0.0);
    // (star0^-1) Delta interior row: (-1, 2, -1) for unit spacing.
    const Vector row = Matrix(delta).row(1) / ops.star0(1);
    CHECK(row(0) == doctest::Approx(-1.0));
    CHECK(row(1) == doctest::Approx(2.0));
    CHECK(row(2) == doctest::Approx(-1.0));
}

TEST_CASE("uniform states span the kernel") {
    const SimplicialComplex K = fig1_mesh();
    const Operators ops = ops_for(K);
    const Index m = 2;
    const SparseMatrix delta = laplacian(K, ops, Vector::Ones(m * K.num_edges()));
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    Vector v(m);
    v << dist(rng), dist(rng);
    Vector uniform(m * K.num_vertices());
    for (Index j = 0; j < K.num_vertices(); ++j) uniform.segment(j * m, m) = v;
    CHECK((delta * uniform).lpNorm<Eigen::Infinity>() <= 1e-15);
}

TEST_CASE("spectrum on the two-triangle mesh") {
    const SimplicialComplex K = fig1_mesh();
    const Operators ops = ops_for(K);
    const Index m = 2;
    const SparseMatrix delta = laplacian(K, ops, Vector::Ones(m * K.num_edges()));
    const Matrix dense(delta);
    Eigen::SelfAdjointEigenSolver<Matrix> es(dense);
    const Vector ev = es.eigenvalues();
    CHECK(ev.minCoeff() >= -1e-12);
    Index zeros = 0;
    for (Index i = 0; i < ev.size(); ++i)
        if (std::abs(ev(i)) < 1e-10) ++zeros;
    CHECK(zeros == m);  // connected mesh: multiplicity m
}

TEST_CASE("kernel dimension counts connected components") {
    Matrix vertices(6, 2);
    const double h = std::sqrt(3.0) / 2.0;
    vertices << 0.0, 0.0, 1.0, 0.0, 0.5, h,
                10.0, 0.0, 11.0, 0.0, 10.5, h;
    const SimplicialComplex K = build_complex(vertices, {{0, 1, 2}, {3, 4, 5}});
    const Operators ops = ops_for(K);
    const Index m = 2;
    const SparseMatrix delta = laplacian(K, ops, Vector::Ones(m * K.num_edges()));
    const Matrix dense(delta);
    Eigen::SelfAdjointEigenSolver<Matrix> es(dense);
    Index zeros = 0;
    for (Index i = 0; i < es.eigenvalues().size(); ++i)
        if (std::abs(es.eigenvalues()(i)) < 1e-10) ++zeros;
    CHECK(zeros == 2 * m);
}

TEST_CASE("symmetry and positive semidefiniteness") {
    const SimplicialComplex K = equilateral_strip(2, 3, 1.0);
    const Operators ops = ops_for(K);
    const Index m = 3;
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> dist(0.0, 2.0);
    Vector r_d(m * K.num_edges());
    for (Index i = 0; i < r_d.size(); ++i) r_d(i) = dist(rng);
    const SparseMatrix delta = laplacian(K, ops, r_d);
    const Matrix dense(delta);
    CHECK((dense - dense.transpose()).lpNorm<Eigen::Infinity>() == 0.0);
    std::uniform_real_distribution<double> xdist(-3.0, 3.0);
    for (int s = 0; s < 10000; ++s) {
        const Vector x = Vector::NullaryExpr(dense.rows(), [&]() { return xdist(rng); });
        CHECK(x.dot(dense * x) >= -1e-10 * x.squaredNorm());
    }
}

TEST_CASE("edge orientation flips do not change the Laplacian") {
    const SimplicialComplex K = fig1_mesh();
    Operators ops = ops_for(K);
    const Vector r_d = Vector::Ones(2 * K.num_edges());
    const SparseMatrix reference = laplacian(K, ops, r_d);

    std::mt19937 rng(71);
    std::bernoulli_distribution flip(0.5);
    for (int trial = 0; trial < 10; ++trial) {
        Vector signs(K.num_edges());
        for (Index e = 0; e < K.num_edges(); ++e) signs(e) = flip(rng) ? -1.0 : 1.0;
        Operators flipped = ops;
        flipped.d = signs.asDiagonal() * ops.d;
        const SparseMatrix delta = laplacian(K, flipped, r_d);
        CHECK((Matrix(delta) - Matrix(reference)).lpNorm<Eigen::Infinity>() == 0.0);
    }
}

TEST_CASE("R_d size must be a species multiple of the edge count") {
    const SimplicialComplex K = fig1_mesh();
    const Operators ops = ops_for(K);
    CHECK_THROWS_AS(laplacian(K, ops, Vector::Ones(K.num_edges() + 1)), DimensionMismatch);
    CHECK_THROWS_AS(laplacian(K, ops, Vector::Constant(K.num_edges(), -1.0)), DomainError);
}

TEST_CASE("refinement convergence at second order") {
    // (star0^-1) Delta applied to samples of sin(pi s) must approach
    // pi^2 sin(pi s) at interior vertices with O(h^2) error.
    const double pi = std::numbers::pi;
    double previous_error = 0.0;
    for (const int n_v : {17, 33, 65}) {
        const SimplicialComplex K = interval_mesh(n_v, 1.0);
        const Operators ops = ops_for(K);
        const SparseMatrix delta = laplacian(K, ops, Vector::Ones(K.num_edges()));
        Vector u(n_v);
        for (int i = 0; i < n_v; ++i) u(i) = std::sin(pi * K.vertices(i, 0));
        const Vector lap = ops.star0.cwiseInverse().asDiagonal() * (delta * u);
        double err = 0.0;
        for (int i = 1; i + 1 < n_v; ++i)
            err = std::max(err, std::abs(lap(i) - pi * pi * std::sin(pi * K.vertices(i, 0))));
        if (previous_error > 0.0) CHECK(previous_error / err >= 3.5);
        previous_error = err;
    }
}
