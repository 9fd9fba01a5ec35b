// Unit tests for the finite-field enumeration oracle: two independent
// classification strategies, the orbit-stabilizer audit, invariant
// fingerprints on orbits, and mod-p membership of the small base algebras.
#include <catch2/catch_amalgamated.hpp>

#include <chrono>

#include "nilalg/ff.hpp"
#include "nilalg/invariants.hpp"

using namespace nilalg;

namespace {

// Reduction of an exact rational tensor mod p (entries must be p-integral).
ff::Tensor reduce_mod_p(const Algebra<GQ>& a, int p) {
    ff::Tensor t(a.n * a.n * a.n);
    for (size_t i = 0; i < a.n; ++i)
        for (size_t j = 0; j < a.n; ++j)
            for (size_t k = 0; k < a.n; ++k) {
                const GQ& x = a.c[i][j][k];
                REQUIRE(x.is_real());
                long num = (boost::multiprecision::numerator(x.re) % p).convert_to<long>();
                long den = (boost::multiprecision::denominator(x.re) % p).convert_to<long>();
                REQUIRE(den % p != 0);
                long dinv = 1;
                for (long d = 1; d < p; ++d)
                    if (den * d % p == 1) dinv = d;
                t[(i * a.n + j) * a.n + k] =
                    static_cast<uint8_t>(((num * dinv) % p + p) % p);
            }
    return t;
}

struct Run {
    ff::Group group;
    std::vector<uint64_t> codes;
    ff::Classification canon;
    ff::Classification uf;
};

Run run_pair(size_t n, int p) {
    Run r{ff::gl_group(n, p), {}, {}, {}};
    r.codes = ff::enumerate_codes(n, p);
    r.canon = ff::classify_by_orbit_expansion(r.codes, r.group);
    r.uf = ff::classify_by_union_find(r.codes, r.group);
    return r;
}

}  // namespace

TEST_CASE("the two enumeration strategies agree and orbits audit exactly") {
    auto t0 = std::chrono::steady_clock::now();
    for (auto [n, p] : {std::pair<size_t, int>{2, 2}, {2, 3}, {3, 2}}) {
        INFO("n=" << n << " p=" << p);
        Run r = run_pair(n, p);
        // Agreement of the independent strategies.
        CHECK(r.canon.orbit_sizes.size() == r.uf.orbit_sizes.size());
        CHECK(r.canon.canonical() == r.uf.canonical());
        CHECK(r.canon.orbit_sizes == r.uf.orbit_sizes);
        // Orbit sizes partition the identity-satisfying set.
        uint64_t sum = 0;
        for (const auto& [c, sz] : r.canon.orbit_sizes) sum += sz;
        CHECK(sum == r.codes.size());
        // Orbit-stabilizer identity for every orbit.
        for (const auto& [c, sz] : r.canon.orbit_sizes) {
            ff::Tensor t = ff::decode(c, n, p);
            CHECK(sz * ff::stabilizer_size(t, r.group) == r.group.size());
        }
        // The zero tensor is always its own class.
        CHECK(r.canon.orbit_sizes.count(0) == 1);
        CHECK(r.canon.orbit_sizes.at(0) == 1);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    INFO("elapsed " << secs << "s");
    CHECK(secs < 300.0);
}

TEST_CASE("dimension one is trivial over every supported characteristic") {
    for (int p : {2, 3, 5}) {
        auto codes = ff::enumerate_codes(1, p);
        REQUIRE(codes.size() == 1);  // only the zero algebra: e1e1 = c*e1 is not nilpotent
        CHECK(codes[0] == 0);
    }
}

TEST_CASE("the search-space guard rejects infeasible sizes") {
    CHECK_THROWS_AS(ff::enumerate_codes(3, 3), ff::SearchSpaceTooLarge);
    CHECK_THROWS_AS(ff::enumerate_codes(3, 5), ff::SearchSpaceTooLarge);
    CHECK_THROWS_AS(ff::enumerate_codes(4, 2), ff::SearchSpaceTooLarge);
}

TEST_CASE("fingerprints are constant on orbits and collide across classes") {
    // Full check at (2,2) and (2,3): every member of every orbit carries the
    // fingerprint of its canonical form.
    for (auto [n, p] : {std::pair<size_t, int>{2, 2}, {2, 3}}) {
        INFO("n=" << n << " p=" << p);
        ff::Group g = ff::gl_group(n, p);
        auto codes = ff::enumerate_codes(n, p);
        auto cls = ff::classify_by_orbit_expansion(codes, g);
        for (const auto& [c, sz] : cls.orbit_sizes) {
            ff::Tensor rep = ff::decode(c, n, p);
            ff::FFPrint ref = ff::ff_fingerprint(rep, n, p);
            for (size_t m = 0; m < g.size(); ++m) {
                ff::Tensor moved = ff::act(g.mats[m], g.invs[m], rep, n, p);
                CHECK(ff::ff_fingerprint(moved, n, p) == ref);
            }
        }
    }
    // The zero algebra's derivation algebra is all of gl_n.
    CHECK(ff::ff_fingerprint(ff::Tensor(8, 0), 2, 2).der_dim == 4);
    CHECK(ff::ff_fingerprint(ff::Tensor(27, 0), 3, 2).der_dim == 9);
    // Fingerprints are incomplete: distinct canonical forms with equal
    // fingerprints exist at (3,2) and are flagged as expected collisions.
    {
        ff::Group g = ff::gl_group(3, 2);
        auto cls = ff::classify_by_orbit_expansion(ff::enumerate_codes(3, 2), g);
        std::map<std::tuple<size_t, size_t, std::vector<size_t>>, size_t> buckets;
        for (const auto& [c, sz] : cls.orbit_sizes) {
            ff::FFPrint f = ff::ff_fingerprint(ff::decode(c, 3, 2), 3, 2);
            ++buckets[{f.ann_dim, f.der_dim, f.series_dims}];
        }
        size_t collisions = 0;
        for (const auto& [k, count] : buckets)
            if (count > 1) collisions += count - 1;
        CHECK(collisions > 0);
    }
}

TEST_CASE("small base algebras reduce mod 3 to legitimate classes") {
    // n = 3, p = 3 is beyond full enumeration, but a single orbit is not:
    // each reduced tensor must satisfy the identities, its whole orbit must
    // stay inside them, and the orbit-stabilizer identity must hold.
    ff::Group g = ff::gl_group(3, 3);
    REQUIRE(g.size() == 11232);  // |GL(3, F_3)|
    for (const std::string name : {"N01", "N02", "N03", "N03^0", "N04", "L1"}) {
        INFO(name);
        BaseAlgebra b = load_base_algebra(name);
        Algebra<GQ> a =
            eval_algebra(b.alg, default_sample(b.data.params, b.exclusion_polys));
        ff::Tensor t = reduce_mod_p(a, 3);
        REQUIRE(ff::right_leibniz_ff(t, 3, 3));
        REQUIRE(ff::nilpotent_ff(t, 3, 3));
        std::set<uint64_t> orbit;
        for (size_t m = 0; m < g.size(); ++m) {
            ff::Tensor moved = ff::act(g.mats[m], g.invs[m], t, 3, 3);
            CHECK(ff::right_leibniz_ff(moved, 3, 3));
            orbit.insert(ff::encode(moved, 3));
        }
        CHECK(*orbit.begin() == ff::canonical_code(t, g));
        CHECK(orbit.size() * ff::stabilizer_size(t, g) == g.size());
    }
}
