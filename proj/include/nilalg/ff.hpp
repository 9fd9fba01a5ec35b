// Brute-force enumeration of nilpotent (right) Leibniz algebras over small
// prime fields, used as an independent oracle for counts, identities, and
// invariant behavior at desk scale.
//
// A structure tensor over F_p is n^3 digits c[i][j][k] (coefficient of e_k
// in e_i e_j), encoded as a base-p integer with entry (0,0,0) most
// significant, so lexicographic comparison of tensors is integer comparison
// of codes.  Two independent classification strategies are provided:
// canonical-minimum via full orbit expansion with memoization, and
// union-find over the action of a verified generating set of GL(n, F_p).
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace nilalg::ff {

using Tensor = std::vector<uint8_t>;  // n^3 entries, index (i*n + j)*n + k
using FFMat = std::vector<uint8_t>;   // n^2 entries, row-major

struct SearchSpaceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline uint64_t pow_u64(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

inline uint64_t encode(const Tensor& t, int p) {
    uint64_t code = 0;
    for (uint8_t d : t) code = code * p + d;
    return code;
}

inline Tensor decode(uint64_t code, size_t n, int p) {
    Tensor t(n * n * n);
    for (size_t idx = t.size(); idx-- > 0;) {
        t[idx] = static_cast<uint8_t>(code % p);
        code /= p;
    }
    return t;
}

// --- small linear algebra mod p ---------------------------------------------

// Row reduction in place; returns the rank.  Columns at index >= pivot_limit
// (e.g. an augmented identity block) are never chosen as pivots.
inline size_t rank_ff(std::vector<std::vector<uint8_t>>& rows, int p,
                      size_t pivot_limit = SIZE_MAX) {
    size_t rank = 0, ncols = rows.empty() ? 0 : rows[0].size();
    size_t limit = std::min(pivot_limit, ncols);
    for (size_t c = 0; c < limit && rank < rows.size(); ++c) {
        size_t sel = rows.size();
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i][c] % p) { sel = i; break; }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        // Scale pivot to 1.
        int inv = 1;
        for (int x = 1; x < p; ++x)
            if (rows[rank][c] * x % p == 1) { inv = x; break; }
        for (auto& x : rows[rank]) x = static_cast<uint8_t>(x * inv % p);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] % p == 0) continue;
            int f = rows[i][c];
            for (size_t j = 0; j < ncols; ++j)
                rows[i][j] = static_cast<uint8_t>((rows[i][j] + (p - f) * rows[rank][j]) % p);
        }
        ++rank;
    }
    return rank;
}

// Inverse mod p; returns false if singular.
inline bool invert_ff(const FFMat& m, size_t n, int p, FFMat& out) {
    std::vector<std::vector<uint8_t>> aug(n, std::vector<uint8_t>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i * n + j];
        aug[i][n + i] = 1;
    }
    if (rank_ff(aug, p, n) != n) return false;
    out.assign(n * n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i * n + j] = aug[i][n + j];
    return true;
}

// --- algebra identities over F_p --------------------------------------------

inline bool right_leibniz_ff(const Tensor& t, size_t n, int p) {
    auto c = [&](size_t i, size_t j, size_t k) { return t[(i * n + j) * n + k]; };
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t z = 0; z < n; ++z)
                for (size_t k = 0; k < n; ++k) {
                    int lhs = 0, rhs = 0;
                    for (size_t l = 0; l < n; ++l) {
                        lhs += c(x, y, l) * c(l, z, k);
                        rhs += c(x, z, l) * c(l, y, k) + c(y, z, l) * c(x, l, k);
                    }
                    if ((lhs - rhs) % p) return false;
                }
    return true;
}

inline bool nilpotent_ff(const Tensor& t, size_t n, int p) {
    // Lower central series by span sizes; the whole space is A^1.
    auto product_into = [&](const std::vector<uint8_t>& u, const std::vector<uint8_t>& v,
                            std::vector<uint8_t>& out) {
        std::fill(out.begin(), out.end(), 0);
        for (size_t i = 0; i < n; ++i) {
            if (!u[i]) continue;
            for (size_t j = 0; j < n; ++j) {
                if (!v[j]) continue;
                for (size_t k = 0; k < n; ++k)
                    out[k] = static_cast<uint8_t>((out[k] + u[i] * v[j] * t[(i * n + j) * n + k]) % p);
            }
        }
    };
    std::vector<std::vector<uint8_t>> whole(n, std::vector<uint8_t>(n, 0));
    for (size_t i = 0; i < n; ++i) whole[i][i] = 1;
    std::vector<std::vector<uint8_t>> prev = whole;
    size_t prev_dim = n;
    for (;;) {
        std::vector<std::vector<uint8_t>> gens;
        std::vector<uint8_t> tmp(n);
        for (const auto& u : prev)
            for (const auto& v : whole) {
                product_into(u, v, tmp);
                gens.push_back(tmp);
                product_into(v, u, tmp);
                gens.push_back(tmp);
            }
        size_t d = rank_ff(gens, p);
        if (d == 0) return true;
        if (d == prev_dim) return false;
        gens.resize(d);
        prev = gens;
        prev_dim = d;
    }
}

// --- the GL(n, F_p) action --------------------------------------------------

struct Group {
    size_t n;
    int p;
    std::vector<FFMat> mats;
    std::vector<FFMat> invs;
    size_t size() const { return mats.size(); }
};

inline Group gl_group(size_t n, int p) {
    Group g{n, p, {}, {}};
    uint64_t total = pow_u64(p, n * n);
    for (uint64_t code = 0; code < total; ++code) {
        FFMat m(n * n);
        uint64_t c = code;
        for (size_t idx = n * n; idx-- > 0;) {
            m[idx] = static_cast<uint8_t>(c % p);
            c /= p;
        }
        FFMat inv;
        if (invert_ff(m, n, p, inv)) {
            g.mats.push_back(std::move(m));
            g.invs.push_back(std::move(inv));
        }
    }
    return g;
}

// New structure constants after f_i = sum_a g[i][a] e_a.
inline Tensor act(const FFMat& g, const FFMat& ginv, const Tensor& t, size_t n, int p) {
    Tensor out(n * n * n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            // product of f_i and f_j in the old basis
            std::array<int, 3> prod = {0, 0, 0};
            for (size_t a = 0; a < n; ++a) {
                if (!g[i * n + a]) continue;
                for (size_t b = 0; b < n; ++b) {
                    if (!g[j * n + b]) continue;
                    int f = g[i * n + a] * g[j * n + b];
                    for (size_t l = 0; l < n; ++l) prod[l] += f * t[(a * n + b) * n + l];
                }
            }
            for (size_t k = 0; k < n; ++k) {
                int acc = 0;
                for (size_t l = 0; l < n; ++l) acc += prod[l] * ginv[l * n + k];
                out[(i * n + j) * n + k] = static_cast<uint8_t>(((acc % p) + p) % p);
            }
        }
    return out;
}

// --- enumeration of identity-satisfying tensors ------------------------------

// All right-Leibniz nilpotent tensors for p = 2, n = 3, with the nine rows
// c[i][j] packed as 3-bit masks (the performance core: XOR is addition).
inline std::vector<uint64_t> enumerate_codes_2_3(size_t jobs) {
    auto scan = [](uint32_t lo, uint32_t hi) {
        std::vector<uint64_t> found;
        uint32_t row[3][3];
        for (uint32_t code = lo; code < hi; ++code) {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    row[i][j] = (code >> (24 - 3 * (3 * i + j))) & 7u;
            auto mul_left = [&](uint32_t v, int z) {  // (v as a vector) * e_z
                uint32_t r = 0;
                if (v & 4) r ^= row[0][z];
                if (v & 2) r ^= row[1][z];
                if (v & 1) r ^= row[2][z];
                return r;
            };
            auto mul_right = [&](int x, uint32_t v) {  // e_x * (v as a vector)
                uint32_t r = 0;
                if (v & 4) r ^= row[x][0];
                if (v & 2) r ^= row[x][1];
                if (v & 1) r ^= row[x][2];
                return r;
            };
            bool ok = true;
            for (int x = 0; x < 3 && ok; ++x)
                for (int y = 0; y < 3 && ok; ++y)
                    for (int z = 0; z < 3; ++z)
                        if (mul_left(row[x][y], z) !=
                            (mul_left(row[x][z], y) ^ mul_right(x, row[y][z]))) {
                            ok = false;
                            break;
                        }
            if (!ok) continue;
            // The 3-bit row packing uses bit 2 for e_1, matching the digit
            // encoding (entry (i,j,0) more significant than (i,j,2)), so the
            // packed code IS the base-2 digit code.
            Tensor t = decode(code, 3, 2);
            if (nilpotent_ff(t, 3, 2)) found.push_back(code);
        }
        return found;
    };
    const uint32_t total = 1u << 27;
    if (jobs <= 1) return scan(0, total);
    std::vector<std::future<std::vector<uint64_t>>> parts;
    uint32_t chunk = total / static_cast<uint32_t>(jobs) + 1;
    for (uint32_t lo = 0; lo < total; lo += chunk)
        parts.push_back(std::async(std::launch::async, scan, lo, std::min(lo + chunk, total)));
    std::vector<uint64_t> all;  // deterministic merge in range order
    for (auto& f : parts) {
        auto v = f.get();
        all.insert(all.end(), v.begin(), v.end());
    }
    return all;
}

inline std::vector<uint64_t> enumerate_codes(size_t n, int p, size_t jobs = 1) {
    uint64_t space = pow_u64(p, n * n * n);
    if (n > 3 || space > 1000000000ull)
        throw SearchSpaceTooLarge("p^(n^3) exceeds the enforced bound");
    if (n == 3 && p == 2) return enumerate_codes_2_3(jobs);
    std::vector<uint64_t> found;
    for (uint64_t code = 0; code < space; ++code) {
        Tensor t = decode(code, n, p);
        if (right_leibniz_ff(t, n, p) && nilpotent_ff(t, n, p)) found.push_back(code);
    }
    return found;
}

// --- classification strategies ----------------------------------------------

struct Classification {
    size_t n = 0;
    int p = 0;
    uint64_t total = 0;                        // identity-satisfying tensors
    std::map<uint64_t, uint64_t> orbit_sizes;  // canonical code -> orbit size
    std::vector<uint64_t> canonical() const {
        std::vector<uint64_t> out;
        for (const auto& [c, _] : orbit_sizes) out.push_back(c);
        return out;
    }
};

// Strategy 1: canonical minimum by full orbit expansion with memoization.
inline Classification classify_by_orbit_expansion(const std::vector<uint64_t>& codes,
                                                  const Group& g) {
    Classification out{g.n, g.p, codes.size(), {}};
    std::unordered_map<uint64_t, char> seen;
    for (uint64_t code : codes) {
        if (seen.count(code)) continue;
        Tensor t = decode(code, g.n, g.p);
        std::set<uint64_t> orbit;
        for (size_t m = 0; m < g.size(); ++m)
            orbit.insert(encode(act(g.mats[m], g.invs[m], t, g.n, g.p), g.p));
        for (uint64_t o : orbit) seen[o] = 1;
        out.orbit_sizes[*orbit.begin()] = orbit.size();
    }
    return out;
}

// A small generating set of GL(n, F_p): a transvection, the cyclic basis
// permutation, and a diagonal primitive scaling.  Verified by closure before
// use, so the union-find strategy never silently under-merges.
inline std::vector<std::pair<FFMat, FFMat>> verified_generators(const Group& g) {
    size_t n = g.n;
    int p = g.p;
    std::vector<FFMat> gens;
    auto ident = [&] {
        FFMat m(n * n, 0);
        for (size_t i = 0; i < n; ++i) m[i * n + i] = 1;
        return m;
    };
    FFMat trans = ident();
    if (n > 1) trans[0 * n + 1] = 1;
    gens.push_back(trans);
    if (n > 1) {
        FFMat cyc(n * n, 0);
        for (size_t i = 0; i < n; ++i) cyc[i * n + (i + 1) % n] = 1;
        gens.push_back(cyc);
    }
    for (int a = 2; a < p; ++a) {
        FFMat d = ident();
        d[0] = static_cast<uint8_t>(a);
        gens.push_back(d);
    }
    // Closure check.
    auto mul = [&](const FFMat& a, const FFMat& b) {
        FFMat r(n * n, 0);
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k)
                for (size_t j = 0; j < n; ++j)
                    r[i * n + j] = static_cast<uint8_t>((r[i * n + j] + a[i * n + k] * b[k * n + j]) % p);
        return r;
    };
    std::set<FFMat> closure = {ident()};
    std::vector<FFMat> frontier = {ident()};
    while (!frontier.empty()) {
        std::vector<FFMat> next;
        for (const auto& m : frontier)
            for (const auto& gen : gens) {
                FFMat prod = mul(m, gen);
                if (closure.insert(prod).second) next.push_back(prod);
            }
        frontier = std::move(next);
    }
    if (closure.size() != g.size())
        throw std::logic_error("generating set does not generate GL(n, F_p)");
    std::vector<std::pair<FFMat, FFMat>> out;
    for (const auto& gen : gens) {
        FFMat inv;
        invert_ff(gen, n, p, inv);
        out.emplace_back(gen, inv);
    }
    return out;
}

// Strategy 2: union-find over the generator action.
inline Classification classify_by_union_find(const std::vector<uint64_t>& codes,
                                             const Group& g) {
    auto gens = verified_generators(g);
    std::unordered_map<uint64_t, size_t> idx;
    for (size_t i = 0; i < codes.size(); ++i) idx[codes[i]] = i;
    std::vector<size_t> parent(codes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < codes.size(); ++i) {
        Tensor t = decode(codes[i], g.n, g.p);
        for (const auto& [gen, ginv] : gens) {
            uint64_t moved = encode(act(gen, ginv, t, g.n, g.p), g.p);
            auto it = idx.find(moved);
            if (it == idx.end())
                throw std::logic_error("group action left the identity-satisfying set");
            size_t a = find(i), b = find(it->second);
            if (a != b) parent[a] = b;
        }
    }
    Classification out{g.n, g.p, codes.size(), {}};
    std::map<size_t, uint64_t> root_min, root_count;
    for (size_t i = 0; i < codes.size(); ++i) {
        size_t r = find(i);
        auto it = root_min.find(r);
        if (it == root_min.end() || codes[i] < it->second) root_min[r] = codes[i];
        ++root_count[r];
    }
    for (const auto& [r, mn] : root_min) out.orbit_sizes[mn] = root_count[r];
    return out;
}

inline size_t stabilizer_size(const Tensor& t, const Group& g) {
    uint64_t code = encode(t, g.p);
    size_t count = 0;
    for (size_t m = 0; m < g.size(); ++m)
        if (encode(act(g.mats[m], g.invs[m], t, g.n, g.p), g.p) == code) ++count;
    return count;
}

// --- invariant fingerprints over F_p -----------------------------------------

struct FFPrint {
    size_t ann_dim = 0;
    size_t der_dim = 0;
    std::vector<size_t> series_dims;
    friend bool operator==(const FFPrint& a, const FFPrint& b) {
        return a.ann_dim == b.ann_dim && a.der_dim == b.der_dim &&
               a.series_dims == b.series_dims;
    }
    friend bool operator!=(const FFPrint& a, const FFPrint& b) { return !(a == b); }
};

inline FFPrint ff_fingerprint(const Tensor& t, size_t n, int p) {
    FFPrint out;
    auto c = [&](size_t i, size_t j, size_t k) { return t[(i * n + j) * n + k]; };

    // Two-sided annihilator: kernel dimension of the 2n^2 x n system.
    {
        std::vector<std::vector<uint8_t>> sys;
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                std::vector<uint8_t> r1(n), r2(n);
                for (size_t i = 0; i < n; ++i) {
                    r1[i] = c(i, j, k);
                    r2[i] = c(j, i, k);
                }
                sys.push_back(r1);
                sys.push_back(r2);
            }
        out.ann_dim = n - rank_ff(sys, p);
    }

    // Derivations: D(xy) = D(x)y + xD(y) as an n^3 x n^2 system in D[k][l].
    {
        std::vector<std::vector<uint8_t>> sys;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) {
                    std::vector<uint8_t> row(n * n, 0);
                    for (size_t l = 0; l < n; ++l) {
                        row[k * n + l] = static_cast<uint8_t>((row[k * n + l] + c(i, j, l)) % p);
                        row[l * n + i] = static_cast<uint8_t>((row[l * n + i] + p - c(l, j, k) % p) % p);
                        row[l * n + j] = static_cast<uint8_t>((row[l * n + j] + p - c(i, l, k) % p) % p);
                    }
                    sys.push_back(row);
                }
        out.der_dim = n * n - rank_ff(sys, p);
    }

    // Lower central series dimensions (mirrors nilpotent_ff).
    {
        std::vector<std::vector<uint8_t>> whole(n, std::vector<uint8_t>(n, 0));
        for (size_t i = 0; i < n; ++i) whole[i][i] = 1;
        std::vector<std::vector<uint8_t>> prev = whole;
        out.series_dims = {n};
        auto prod = [&](const std::vector<uint8_t>& u, const std::vector<uint8_t>& v) {
            std::vector<uint8_t> r(n, 0);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    for (size_t k = 0; k < n; ++k)
                        r[k] = static_cast<uint8_t>((r[k] + u[i] * v[j] * c(i, j, k)) % p);
            return r;
        };
        while (out.series_dims.back() != 0) {
            std::vector<std::vector<uint8_t>> gens;
            for (const auto& u : prev)
                for (const auto& v : whole) {
                    gens.push_back(prod(u, v));
                    gens.push_back(prod(v, u));
                }
            size_t d = rank_ff(gens, p);
            if (d == out.series_dims.back()) break;  // not nilpotent
            out.series_dims.push_back(d);
            gens.resize(d);
            prev = gens;
        }
    }
    return out;
}

// Canonical code of a single tensor by direct orbit expansion (usable even
// when the full tensor space is too large to enumerate, e.g. n = 3, p = 3).
inline uint64_t canonical_code(const Tensor& t, const Group& g) {
    uint64_t best = UINT64_MAX;
    for (size_t m = 0; m < g.size(); ++m)
        best = std::min(best, encode(act(g.mats[m], g.invs[m], t, g.n, g.p), g.p));
    return best;
}

}  // namespace nilalg::ff
