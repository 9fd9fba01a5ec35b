// Unit tests for the exact linear algebra layer: deterministic echelon form,
// kernels, solving, inversion, subspace lattice operations, and the
// parameter-ambiguity guard for symbolic matrices.
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nilalg/matrix.hpp"

using namespace nilalg;

namespace {
Mat<GQ> gq_mat(std::vector<std::vector<long>> rows) {
    Mat<GQ> m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m[i][j] = GQ(rows[i][j]);
    return m;
}
}  // namespace

TEST_CASE("rref is deterministic and fully reduced") {
    Mat<GQ> m = gq_mat({{0, 2, 4}, {1, 1, 1}, {2, 4, 6}});
    auto pivots = rref(m);
    REQUIRE(pivots == std::vector<size_t>{0, 1});
    // Pivot entries are 1 and each pivot column is cleared elsewhere.
    CHECK(m[0][0] == GQ(1));
    CHECK(m[1][1] == GQ(1));
    CHECK(m[0][1] == GQ(0));
    CHECK(m[2][0] == GQ(0));
    CHECK(m[2][1] == GQ(0));
    CHECK(m[2][2] == GQ(0));
}

TEST_CASE("rank, kernel, solve, inverse agree on consistency identities") {
    Mat<GQ> m = gq_mat({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
    CHECK(rank(m) == 2);

    Mat<GQ> k = kernel(m);
    CHECK(k.nrows() == 2);  // rank-nullity
    for (auto& v : k.rows) {
        Vec<GQ> image = m * v;
        for (auto& x : image) CHECK(x == GQ(0));
    }

    Mat<GQ> a = gq_mat({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    Mat<GQ> ai = inverse(a);
    CHECK(a * ai == Mat<GQ>::identity(3));

    Vec<GQ> b{GQ(1), GQ(2), GQ(3)}, x;
    REQUIRE(solve(a, b, x));
    Vec<GQ> ax = a * x;
    for (size_t i = 0; i < 3; ++i) CHECK(ax[i] == b[i]);

    Vec<GQ> bad{GQ(1), GQ(2), GQ(5)}, y;
    CHECK(!solve(gq_mat({{1, 0}, {0, 1}, {1, 1}}), bad, y));
}

TEST_CASE("symbolic echelon refuses ambiguous pivots but accepts declared units") {
    Poly a = Poly::var("a");
    Mat<Scalar> m(2, 2);
    m[0][0] = Scalar(a);  // invertibility depends on whether a = 0
    m[1][1] = Scalar(1);
    CHECK_THROWS_AS(rank(m), ParameterRankAmbiguity);

    NonzeroScope scope({a});
    CHECK(rank(m) == 2);
}

TEST_CASE("subspace lattice: sum, intersection, containment") {
    Subspace<GQ> u(gq_mat({{1, 0, 0, 0}, {0, 1, 0, 0}}));
    Subspace<GQ> v(gq_mat({{0, 1, 0, 0}, {0, 0, 1, 0}}));

    CHECK(u.dim() == 2);
    CHECK(Subspace<GQ>::sum(u, v).dim() == 3);

    Subspace<GQ> w = Subspace<GQ>::intersect(u, v);
    CHECK(w.dim() == 1);
    CHECK(w.contains(Vec<GQ>{GQ(0), GQ(7), GQ(0), GQ(0)}));
    CHECK(!w.contains(Vec<GQ>{GQ(1), GQ(0), GQ(0), GQ(0)}));

    // Modular law sanity on random small subspaces.
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        auto rnd_space = [&](size_t gens) {
            Mat<GQ> g(gens, 4);
            for (size_t i = 0; i < gens; ++i)
                for (size_t j = 0; j < 4; ++j) g[i][j] = GQ(static_cast<long>(rng() % 5) - 2);
            Subspace<GQ> s(g);
            s.ambient = 4;
            return s;
        };
        Subspace<GQ> A = rnd_space(2), B = rnd_space(2), C = rnd_space(3);
        // dim(A+B) + dim(A∩B) == dim A + dim B
        CHECK(Subspace<GQ>::sum(A, B).dim() + Subspace<GQ>::intersect(A, B).dim() ==
              A.dim() + B.dim());
        CHECK(C.contains(Subspace<GQ>::intersect(C, A)));
    }
}

TEST_CASE("symbolic inverse round trip over rational functions") {
    Poly x = Poly::var("x"), t = Poly::var("t");
    NonzeroScope scope({x, t});
    Mat<Scalar> m(2, 2);
    m[0][0] = Scalar(x);
    m[0][1] = Scalar(1);
    m[1][1] = Scalar(t);
    Mat<Scalar> mi = inverse(m);
    CHECK(m * mi == Mat<Scalar>::identity(2));
    CHECK(mi * m == Mat<Scalar>::identity(2));
}
