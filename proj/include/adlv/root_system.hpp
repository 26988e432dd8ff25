#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace adlv {

enum class Kind { A1, A2, C2, G2 };

inline const char* kind_name(Kind k)
{
    switch (k) {
        case Kind::A1: return "A1";
        case Kind::A2: return "A2";
        case Kind::C2: return "C2";
        case Kind::G2: return "G2";
    }
    return "?";
}

/// Integer data for one rank 1 or rank 2 root system.
///
/// Roots are stored as covectors and coroots as vectors in the ambient
/// lattice; the coroot lattice is the translation lattice of W_a.  Points
/// are stored multiplied by `scale`, so every base-alcove vertex and the
/// barycenter of C_M have integer coordinates.
struct RootSystem {
    Kind kind{};
    int dim = 0;
    int rank = 0;
    std::int64_t scale = 1;

    std::vector<Vec> roots;    ///< positive roots (covectors)
    std::vector<Vec> coroots;  ///< coroot of roots[i]
    std::vector<int> simple;   ///< indices of simple roots, in vertex-type order 1..rank
    int highest = 0;           ///< index of the highest root

    std::vector<Mat> weyl;                       ///< index 0 is the identity
    std::vector<std::string> weyl_names;
    std::vector<std::vector<std::uint8_t>> mult;  ///< mult[u][v] = index of u*v
    std::vector<std::uint8_t> inverse;
    std::vector<std::uint8_t> order;  ///< multiplicative order of each element

    std::vector<Vec> vertices;  ///< scaled base-alcove vertices; vertices[c] has type c
    Vec barycenter{};           ///< scaled barycenter of C_M

    Mat gram{};  ///< positive multiple of the invariant inner product
    /// Two integer linear coordinates, oriented like the usual alcove pictures.
    std::array<Vec, 2> frame{};
    /// Euclidean picture coordinates (rendering only).
    std::array<std::array<double, 3>, 2> picture{};

    std::size_t weyl_size() const { return weyl.size(); }

    int weyl_index(const Mat& m) const
    {
        for (std::size_t i = 0; i < weyl.size(); ++i)
            if (weyl[i] == m) return static_cast<int>(i);
        return -1;
    }

    int root_index(const Vec& covector) const
    {
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (roots[i] == covector) return static_cast<int>(i);
        return -1;
    }

    const Vec& simple_root(int c) const { return roots[simple[c - 1]]; }

    /// Integer inner product induced by `gram`.
    std::int64_t inner(const Vec& a, const Vec& b) const { return dot(a, mat_vec(gram, b)); }

    std::int64_t frame_cross(const Vec& a, const Vec& b) const
    {
        return dot(frame[0], a) * dot(frame[1], b) - dot(frame[1], a) * dot(frame[0], b);
    }
};

namespace detail {

inline Mat reflection_matrix(const Vec& root, const Vec& coroot, int dim)
{
    Mat m = identity_mat();
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m[r][c] -= coroot[r] * root[c];
    return m;
}

inline Mat mat_power(const Mat& m, int k)
{
    Mat r = identity_mat();
    for (int i = 0; i < k; ++i) r = mul(r, m);
    return r;
}

inline std::string power_name(const char* base, int k)
{
    if (k == 0) return "";
    if (k == 1) return base;
    return std::string(base) + std::to_string(k);
}

/// Elements named r^i f^j in the order 1, r, ..., r^{n-1}, f, rf, ..., r^{n-1}f.
inline void fill_dihedral(RootSystem& rs, const Mat& r, const Mat& f, int n)
{
    for (int j = 0; j < 2; ++j) {
        for (int i = 0; i < n; ++i) {
            Mat m = mul(mat_power(r, i), j ? f : identity_mat());
            rs.weyl.push_back(m);
            std::string name = power_name("r", i) + (j ? "f" : "");
            rs.weyl_names.push_back(name.empty() ? "1" : name);
        }
    }
}

inline void finish(RootSystem& rs)
{
    const int dim = rs.dim;
    // The names must enumerate exactly the group generated by the simple reflections.
    std::map<Mat, int> seen;
    for (std::size_t i = 0; i < rs.weyl.size(); ++i) seen.emplace(rs.weyl[i], static_cast<int>(i));
    if (seen.size() != rs.weyl.size()) throw std::logic_error("duplicate Weyl element");
    std::vector<Mat> gens;
    for (int s : rs.simple) gens.push_back(reflection_matrix(rs.roots[s], rs.coroots[s], dim));
    std::vector<Mat> stack{identity_mat()};
    std::map<Mat, bool> reached{{identity_mat(), true}};
    while (!stack.empty()) {
        Mat m = stack.back();
        stack.pop_back();
        for (const Mat& g : gens) {
            Mat p = mul(m, g);
            if (!reached.count(p)) {
                reached[p] = true;
                stack.push_back(p);
            }
        }
    }
    if (reached.size() != rs.weyl.size()) throw std::logic_error("Weyl group size mismatch");
    for (auto& [m, _] : reached)
        if (!seen.count(m)) throw std::logic_error("Weyl naming incomplete");

    const std::size_t n = rs.weyl.size();
    rs.mult.assign(n, std::vector<std::uint8_t>(n, 0));
    rs.inverse.assign(n, 0);
    rs.order.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rs.mult[i][j] = static_cast<std::uint8_t>(seen.at(mul(rs.weyl[i], rs.weyl[j])));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (rs.mult[i][j] == 0) rs.inverse[i] = static_cast<std::uint8_t>(j);
        std::size_t k = i;
        int ord = 1;
        while (k != 0) {
            k = rs.mult[k][i];
            ++ord;
        }
        rs.order[i] = static_cast<std::uint8_t>(ord);
    }

    // Base-alcove vertices: fundamental coweights divided by their pairing
    // with the highest root.  With C the Cartan matrix, adj(C) rows give
    // positive multiples of the fundamental coweights.
    const Vec& theta = rs.roots[rs.highest];
    std::vector<Vec> u;
    if (rs.rank == 1) {
        u.push_back(rs.coroots[rs.simple[0]]);
    } else {
        const Vec& c1 = rs.coroots[rs.simple[0]];
        const Vec& c2 = rs.coroots[rs.simple[1]];
        const Vec& a1 = rs.roots[rs.simple[0]];
        const Vec& a2 = rs.roots[rs.simple[1]];
        std::int64_t C11 = dot(c1, a1), C12 = dot(c1, a2), C21 = dot(c2, a1), C22 = dot(c2, a2);
        // adj = [[C22, -C12], [-C21, C11]]
        u.push_back(add(scaled(c1, C22), scaled(c2, -C12)));
        u.push_back(add(scaled(c1, -C21), scaled(c2, C11)));
    }
    std::int64_t L = 1;
    for (const Vec& v : u) {
        std::int64_t den = dot(v, theta);
        std::int64_t g = std::gcd(den, vec_gcd(v));
        L = std::lcm(L, den / g);
    }
    rs.scale = (rs.rank + 1) * L;
    rs.vertices.assign(1, zero_vec());
    for (const Vec& v : u) {
        std::int64_t den = dot(v, theta);
        Vec p = scaled(v, rs.scale);
        for (int i = 0; i < 3; ++i) {
            if (p[i] % den != 0) throw std::logic_error("vertex not integral");
            p[i] /= den;
        }
        rs.vertices.push_back(p);
    }
    Vec sum = zero_vec();
    for (const Vec& v : rs.vertices) sum = add(sum, v);
    for (int i = 0; i < 3; ++i) {
        if (sum[i] % (rs.rank + 1) != 0) throw std::logic_error("barycenter not integral");
        rs.barycenter[i] = sum[i] / (rs.rank + 1);
    }
}

inline RootSystem make_a1()
{
    RootSystem rs;
    rs.kind = Kind::A1;
    rs.dim = 1;
    rs.rank = 1;
    rs.roots = {Vec{2, 0, 0}};
    rs.coroots = {Vec{1, 0, 0}};
    rs.simple = {0};
    rs.highest = 0;
    rs.weyl = {identity_mat(), Mat{Vec{-1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}}};
    rs.weyl_names = {"1", "s"};
    rs.gram = identity_mat();
    rs.frame = {Vec{1, 0, 0}, Vec{0, 0, 0}};
    rs.picture = {{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}};
    finish(rs);
    return rs;
}

inline RootSystem make_a2()
{
    RootSystem rs;
    rs.kind = Kind::A2;
    rs.dim = 3;
    rs.rank = 2;
    rs.roots = {Vec{1, -1, 0}, Vec{0, 1, -1}, Vec{1, 0, -1}};
    rs.coroots = rs.roots;
    rs.simple = {0, 1};
    rs.highest = 2;
    // r: (x1, x2, x3) -> (x3, x1, x2); f swaps the last two coordinates.
    Mat r{Vec{0, 0, 1}, Vec{1, 0, 0}, Vec{0, 1, 0}};
    Mat f{Vec{1, 0, 0}, Vec{0, 0, 1}, Vec{0, 1, 0}};
    fill_dihedral(rs, r, f, 3);
    rs.gram = identity_mat();
    rs.frame = {Vec{1, -1, 0}, Vec{0, 1, -1}};
    const double h = 0.8660254037844386;
    // picture = a * (1, 0) + b * (1/2, sqrt3/2) with a = x1 - x2, b = x2 - x3
    rs.picture = {{{1.0, -0.5, -0.5}, {0.0, h, -h}}};
    finish(rs);
    return rs;
}

inline RootSystem make_c2()
{
    RootSystem rs;
    rs.kind = Kind::C2;
    rs.dim = 2;
    rs.rank = 2;
    rs.roots = {Vec{1, -1, 0}, Vec{0, 2, 0}, Vec{1, 1, 0}, Vec{2, 0, 0}};
    rs.coroots = {Vec{1, -1, 0}, Vec{0, 1, 0}, Vec{1, 1, 0}, Vec{1, 0, 0}};
    rs.simple = {0, 1};
    rs.highest = 3;
    // r: (m, n) -> (-n, m); f: (m, n) -> (n, m).
    Mat r{Vec{0, -1, 0}, Vec{1, 0, 0}, Vec{0, 0, 1}};
    Mat f{Vec{0, 1, 0}, Vec{1, 0, 0}, Vec{0, 0, 1}};
    fill_dihedral(rs, r, f, 4);
    rs.gram = identity_mat();
    // e1 points up-right and e2 down-right in the pictures.
    rs.frame = {Vec{1, 1, 0}, Vec{1, -1, 0}};
    rs.picture = {{{1.0, 1.0, 0.0}, {1.0, -1.0, 0.0}}};
    finish(rs);
    return rs;
}

inline RootSystem make_g2()
{
    RootSystem rs;
    rs.kind = Kind::G2;
    rs.dim = 2;
    rs.rank = 2;
    // Coordinates are taken in the basis (epsilon, delta) of the coroot
    // lattice: two shortest coroots at 120 degrees.
    rs.roots = {Vec{0, 1, 0}, Vec{1, -2, 0}, Vec{1, -1, 0},
                Vec{1, 0, 0}, Vec{1, 1, 0},  Vec{2, -1, 0}};
    rs.coroots = {Vec{1, 2, 0}, Vec{0, -1, 0}, Vec{1, -1, 0},
                  Vec{2, 1, 0}, Vec{1, 1, 0},  Vec{1, 0, 0}};
    rs.simple = {0, 1};
    rs.highest = 5;
    // r: epsilon -> epsilon + delta, delta -> -epsilon (60 degree rotation);
    // f: epsilon -> epsilon, delta -> -epsilon - delta.
    Mat r{Vec{1, -1, 0}, Vec{1, 0, 0}, Vec{0, 0, 1}};
    Mat f{Vec{1, -1, 0}, Vec{0, -1, 0}, Vec{0, 0, 1}};
    fill_dihedral(rs, r, f, 6);
    rs.gram = Mat{Vec{2, -1, 0}, Vec{-1, 2, 0}, Vec{0, 0, 0}};
    rs.frame = {Vec{1, 0, 0}, Vec{0, 1, 0}};
    const double h = 0.8660254037844386;
    rs.picture = {{{1.0, -0.5, 0.0}, {0.0, h, 0.0}}};
    finish(rs);
    return rs;
}

}  // namespace detail

inline const RootSystem& root_system(Kind k)
{
    static const RootSystem a1 = detail::make_a1();
    static const RootSystem a2 = detail::make_a2();
    static const RootSystem c2 = detail::make_c2();
    static const RootSystem g2 = detail::make_g2();
    switch (k) {
        case Kind::A1: return a1;
        case Kind::A2: return a2;
        case Kind::C2: return c2;
        case Kind::G2: return g2;
    }
    throw std::invalid_argument("unknown root system");
}

}  // namespace adlv
