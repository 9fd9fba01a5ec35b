// Unit tests for central extensions and the reconstructed five-dimensional
// catalog: product-table anchors, split detection, annihilator structure,
// Grassmannian membership of every orbit, and the quotient round trip.
#include <catch2/catch_amalgamated.hpp>

#include "nilalg/catalog.hpp"

using namespace nilalg;

TEST_CASE("central extension by explicit classes matches hand anchors") {
    // First catalog algebra: base e1e1=e2 extended by <[d21],[d31]> gives
    // e1e1=e2, e2e1=e4, e3e1=e5.
    const CatalogEntry& l01 = catalog_entry("L01");
    Algebra<Scalar> expect =
        parse_algebra(5, "e1 e1 = e2; e2 e1 = e4; e3 e1 = e5");
    CHECK(l01.alg == expect);

    // L46 is printed in full in the source classification.
    const CatalogEntry& l46 = catalog_entry("L46");
    CHECK(l46.alg == parse_algebra(
                         5, "e1 e2 = e3; e2 e1 = e4; e2 e2 = -e3; e3 e2 = e5; e4 e1 = e5"));

    // L82 is the chain algebra (unique one-generated entry).
    const CatalogEntry& l82 = catalog_entry("L82");
    CHECK(l82.alg ==
          parse_algebra(5, "e1 e1 = e2; e2 e1 = e3; e3 e1 = e4; e4 e1 = e5"));

    // L27 over the two-squares base.
    const CatalogEntry& l27 = catalog_entry("L27");
    CHECK(l27.alg ==
          parse_algebra(5, "e1 e1 = e3; e2 e2 = e4; e3 e1 = e5; e4 e2 = e5"));
}

TEST_CASE("a non-cocycle is rejected and the zero form splits") {
    BaseAlgebra n01 = load_base_algebra("N01");
    CHECK_THROWS_AS(central_extension(n01.alg, {parse_cocycle(3, "d12")}),
                    NotACocycle);

    Algebra<Scalar> split = central_extension(n01.alg, {Mat<Scalar>(3, 3)});
    CHECK(split.n == 4);
    CHECK(split.annihilator().dim() == n01.alg.annihilator().dim() + 1);
}

TEST_CASE("every catalog entry is a nilpotent right Leibniz algebra") {
    CHECK(catalog().size() == 89);  // 82 + six symmetric families + fL13+C
    for (auto& e : catalog()) {
        INFO("entry " << e.data.name);
        NonzeroScope scope(e.exclusion_polys);
        CHECK(e.alg.right_leibniz_violation() == std::nullopt);
        CHECK(e.alg.is_nilpotent());
    }
}

namespace {
// These four orbits sit in the symmetric stratum of their class space
// (coefficients satisfy a5 = -a3, a6 = -a4 for the two-step base
// e1e2=e3, e2e1=e4), so the extensions satisfy both Leibniz identities.
bool symmetric_orbit(const std::string& name) {
    return name == "L51" || name == "L59" || name == "L60" || name == "L61";
}
}  // namespace

TEST_CASE("reconstructed entries are non-symmetric, border families symmetric") {
    for (auto& e : catalog()) {
        INFO("entry " << e.data.name);
        NonzeroScope scope(e.exclusion_polys);
        bool is_ext = !e.data.base.empty();
        if (is_ext)
            CHECK(e.alg.is_symmetric_leibniz() == symmetric_orbit(e.data.name));
        else if (e.data.name != "fL13+C")
            CHECK(e.alg.is_symmetric_leibniz());
    }
    // The noted special member: L67 at parameter 0 is symmetric.
    Algebra<GQ> l67_0 = eval_algebra(catalog_entry("L67").alg, {{var_id("alpha"), GQ(0)}});
    CHECK(l67_0.is_symmetric_leibniz());
    CHECK(l67_0.annihilator().dim() == 2);
}

TEST_CASE("orbit data is independent modulo coboundaries; T_s verdicts") {
    // Six orbits have a class annihilator that meets the base annihilator in
    // a line, so strict T_s membership fails for them: the extension carries a
    // two-dimensional annihilator instead of the added central line alone.
    auto outside_ts = [](const std::string& n) {
        return n == "L48" || n == "L49" || symmetric_orbit(n);
    };
    for (auto& e : catalog()) {
        if (e.data.base.empty()) continue;
        INFO("entry " << e.data.name);
        NonzeroScope scope(e.exclusion_polys);
        CHECK(classes_independent_mod_b2(e.base_alg, e.thetas));
        CHECK(in_grassmannian_t(e.base_alg, e.thetas) == !outside_ts(e.data.name));
        CHECK(e.alg.annihilator().dim() >= e.thetas.size());
        if (outside_ts(e.data.name)) {
            Subspace<Scalar> core = Subspace<Scalar>::intersect(
                cocycle_annihilator(e.thetas, e.base_alg.n),
                e.base_alg.annihilator());
            CHECK(core.dim() == 1);
            CHECK(e.alg.annihilator().dim() == e.thetas.size() + 1);
        }
    }
}

TEST_CASE("the extension annihilator splits as (Ann(theta) ∩ Ann(A)) + V") {
    for (const char* name : {"L01", "L15", "L28", "L47", "L62", "L82"}) {
        const CatalogEntry& e = catalog_entry(name);
        INFO("entry " << name);
        NonzeroScope scope(e.exclusion_polys);
        size_t n = e.base_alg.n, s = e.thetas.size();
        Subspace<Scalar> core = Subspace<Scalar>::intersect(
            cocycle_annihilator(e.thetas, n), e.base_alg.annihilator());
        CHECK(e.alg.annihilator().dim() == core.dim() + s);
    }
}

TEST_CASE("quotient by the added central directions recovers the base") {
    for (auto& e : catalog()) {
        if (e.data.base.empty()) continue;
        INFO("entry " << e.data.name);
        NonzeroScope scope(e.exclusion_polys);
        size_t n = e.base_alg.n, s = e.thetas.size();
        Mat<Scalar> vgen(s, 5);
        for (size_t r = 0; r < s; ++r) vgen[r][n + r] = Scalar(1);
        Subspace<Scalar> v(vgen);
        CentralQuotient<Scalar> q = quotient_by_central(e.alg, v);
        CHECK(q.quotient == e.base_alg);
        for (size_t r = 0; r < s; ++r) CHECK(q.thetas[r] == e.thetas[r]);
        CHECK(central_roundtrip(e.alg, v));
    }
}

TEST_CASE("quotient rejects non-central subspaces, handles split summands") {
    Algebra<GQ> nf = eval_algebra(
        parse_algebra(3, "e1 e1 = e2; e2 e1 = e3"), {});
    Mat<GQ> bad(1, 3);
    bad[0][0] = GQ(1);
    CHECK_THROWS(quotient_by_central(nf, Subspace<GQ>(bad)));

    // (A + C)/C == A with a zero induced cocycle.
    Algebra<GQ> sum = Algebra<GQ>::direct_sum(nf, Algebra<GQ>(1));
    Mat<GQ> last(1, 4);
    last[0][3] = GQ(1);
    CentralQuotient<GQ> q = quotient_by_central(sum, Subspace<GQ>(last));
    CHECK(q.quotient == nf);
    CHECK(q.thetas[0] == Mat<GQ>(3, 3));
}
