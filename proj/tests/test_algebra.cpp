// Unit tests for the algebra core: identity checking, annihilators, central
// series, basis change, direct sums, and the product-table parser.
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nilalg/algebra.hpp"

using namespace nilalg;

namespace {
Algebra<GQ> eval0(const Algebra<Scalar>& a) { return eval_algebra(a, {}); }
}  // namespace

TEST_CASE("product table parser builds the expected tensor") {
    auto alg = parse_algebra(3, "e1 e1 = e2; e2 e1 = e3");
    CHECK(alg.c[0][0][1] == Scalar(1));
    CHECK(alg.c[1][0][2] == Scalar(1));
    CHECK(alg.c[0][1][0].is_zero());

    auto with_params = parse_algebra(3, "e1 e2 = a*e3 + e1; e2 e2 = (a-1)*e3");
    CHECK(with_params.c[0][1][2] == Scalar::var("a"));
    CHECK(with_params.c[0][1][0] == Scalar(1));
    CHECK(with_params.c[1][1][2] == Scalar::var("a") - Scalar(1));

    CHECK_THROWS(parse_algebra(2, "e1 e1 = e3"));
    CHECK_THROWS(parse_algebra(2, "e1 e1 = e1*e2"));
}

TEST_CASE("right Leibniz identity: known algebras pass, a counterexample fails") {
    // Null-filiform 3-dimensional algebra: e1e1=e2, e2e1=e3.
    auto nf = parse_algebra(3, "e1 e1 = e2; e2 e1 = e3");
    CHECK(nf.right_leibniz_violation() == std::nullopt);

    // Heisenberg Lie algebra is both left and right Leibniz.
    auto heis = parse_algebra(3, "e1 e2 = e3; e2 e1 = -e3");
    CHECK(heis.is_symmetric_leibniz());

    // Idempotent generator violates the identity.
    auto bad = parse_algebra(1, "e1 e1 = e1");
    auto violation = bad.right_leibniz_violation();
    REQUIRE(violation.has_value());
    CHECK(violation->find("right Leibniz fails") != std::string::npos);

    // Parametric family: e1e1=e3, e1e2=e3, e2e2=a*e3 is right Leibniz for all a.
    auto fam = parse_algebra(3, "e1 e1 = e3; e1 e2 = e3; e2 e2 = a*e3");
    CHECK(fam.right_leibniz_violation() == std::nullopt);
}

TEST_CASE("annihilator and derived subspace of the null-filiform algebra") {
    auto nf = eval0(parse_algebra(3, "e1 e1 = e2; e2 e1 = e3"));
    auto ann = nf.annihilator();
    CHECK(ann.dim() == 1);
    CHECK(ann.contains(Vec<GQ>{GQ(0), GQ(0), GQ(1)}));

    auto sq = nf.square();
    CHECK(sq.dim() == 2);
    CHECK(sq.contains(Vec<GQ>{GQ(0), GQ(1), GQ(0)}));
    CHECK(!sq.contains(Vec<GQ>{GQ(1), GQ(0), GQ(0)}));
}

TEST_CASE("lower central series and nilpotency") {
    auto nf = eval0(parse_algebra(3, "e1 e1 = e2; e2 e1 = e3"));
    auto series = nf.lower_central_series();
    std::vector<size_t> dims;
    for (auto& s : series) dims.push_back(s.dim());
    CHECK(dims == std::vector<size_t>{3, 2, 1, 0});
    CHECK(nf.is_nilpotent());

    auto notnil = eval0(parse_algebra(2, "e1 e1 = e1"));
    CHECK(!notnil.is_nilpotent());
}

TEST_CASE("basis change is functorial and preserves identities") {
    auto nf = eval0(parse_algebra(3, "e1 e1 = e2; e2 e1 = e3"));
    std::mt19937 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        Mat<GQ> p(3, 3);
        do {
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = 0; j < 3; ++j) p[i][j] = GQ(static_cast<long>(rng() % 7) - 3);
        } while (rank(p) != 3);
        Algebra<GQ> moved = nf.change_basis(p);
        CHECK(moved.right_leibniz_violation() == std::nullopt);
        CHECK(moved.annihilator().dim() == 1);
        // Changing back with the inverse recovers the original tensor.
        CHECK(moved.change_basis(inverse(p)) == nf);
    }
}

TEST_CASE("direct sums preserve the Leibniz identity and add annihilators") {
    auto a = eval0(parse_algebra(3, "e1 e1 = e2; e2 e1 = e3"));
    auto b = eval0(parse_algebra(1, ""));  // one-dimensional abelian summand
    auto sum = Algebra<GQ>::direct_sum(a, b);
    CHECK(sum.n == 4);
    CHECK(sum.right_leibniz_violation() == std::nullopt);
    CHECK(sum.annihilator().dim() == 2);
    CHECK(sum.is_nilpotent());
}

TEST_CASE("parameter substitution into a family") {
    auto fam = parse_algebra(3, "e1 e1 = e3; e1 e2 = e3; e2 e2 = a*e3");
    auto at2 = eval_algebra(fam, {{var_id("a"), GQ(2)}});
    CHECK(at2.c[1][1][2] == GQ(2));

    auto shifted = subst_algebra(fam, {{var_id("a"), Scalar::var("s", -1)}});
    CHECK(shifted.c[1][1][2] == Scalar::var("s", -1));
}
