#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <deque>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "root_system.hpp"

namespace adlv {

/// t_translation * W[finite]; also names the alcove (t, w) * C_M.
struct AffineElement {
    Vec translation{};
    int finite = 0;

    friend auto operator<=>(const AffineElement&, const AffineElement&) = default;
    friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

using Alcove = AffineElement;

struct AffineHash {
    std::size_t operator()(const AffineElement& g) const noexcept
    {
        std::uint64_t h = static_cast<std::uint64_t>(g.finite) * 0x9E3779B97F4A7C15ULL;
        for (auto v : g.translation) {
            h ^= static_cast<std::uint64_t>(v) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

using AlcoveSet = std::unordered_set<Alcove, AffineHash>;

/// Hyperplane <x, roots[root]> = level in unscaled coordinates.
struct Wall {
    int root = 0;
    std::int64_t level = 0;

    friend auto operator<=>(const Wall&, const Wall&) = default;
};

inline AffineElement identity_element() { return AffineElement{}; }

inline AffineElement translation_element(const Vec& lambda) { return AffineElement{lambda, 0}; }

inline AffineElement finite_element(int w) { return AffineElement{zero_vec(), w}; }

inline AffineElement compose(const RootSystem& rs, const AffineElement& g, const AffineElement& h)
{
    return AffineElement{add(g.translation, mat_vec(rs.weyl[g.finite], h.translation)),
                         rs.mult[g.finite][h.finite]};
}

inline AffineElement invert(const RootSystem& rs, const AffineElement& g)
{
    int ui = rs.inverse[g.finite];
    return AffineElement{neg(mat_vec(rs.weyl[ui], g.translation)), ui};
}

/// Image of a scaled point.
inline Vec act(const RootSystem& rs, const AffineElement& g, const Vec& scaled_point)
{
    return add(mat_vec(rs.weyl[g.finite], scaled_point), scaled(g.translation, rs.scale));
}

inline Vec barycenter(const RootSystem& rs, const Alcove& a) { return act(rs, a, rs.barycenter); }

/// Simple affine reflection s_c; s_0 reflects across <x, theta> = 1.
inline AffineElement generator(const RootSystem& rs, int c)
{
    if (c < 0 || c > rs.rank) throw std::out_of_range("cotype label out of range");
    if (c == 0) {
        const Vec& th = rs.roots[rs.highest];
        return AffineElement{rs.coroots[rs.highest],
                             rs.weyl_index(detail::reflection_matrix(th, rs.coroots[rs.highest], rs.dim))};
    }
    int s = rs.simple[c - 1];
    return AffineElement{zero_vec(), rs.weyl_index(detail::reflection_matrix(rs.roots[s], rs.coroots[s], rs.dim))};
}

namespace detail {

struct Generators {
    std::vector<AffineElement> s;
};

inline const Generators& generators(const RootSystem& rs)
{
    static const auto build = [](const RootSystem& r) {
        Generators g;
        for (int c = 0; c <= r.rank; ++c) g.s.push_back(generator(r, c));
        return g;
    };
    static const Generators a1 = build(root_system(Kind::A1));
    static const Generators a2 = build(root_system(Kind::A2));
    static const Generators c2 = build(root_system(Kind::C2));
    static const Generators g2 = build(root_system(Kind::G2));
    switch (rs.kind) {
        case Kind::A1: return a1;
        case Kind::A2: return a2;
        case Kind::C2: return c2;
        case Kind::G2: return g2;
    }
    return a1;
}

}  // namespace detail

inline const AffineElement& simple_reflection(const RootSystem& rs, int c)
{
    return detail::generators(rs).s.at(static_cast<std::size_t>(c));
}

inline Alcove adjacent(const RootSystem& rs, const Alcove& d, int c)
{
    return compose(rs, d, simple_reflection(rs, c));
}

/// Facet functional of C_M for cotype c, positive inside C_M.
inline std::int64_t base_facet_value(const RootSystem& rs, int c, const Vec& x)
{
    if (c == 0) return rs.scale - dot(x, rs.roots[rs.highest]);
    return dot(x, rs.simple_root(c));
}

/// Sign of p relative to the wall through the cotype-c facet of d; + is d's side.
inline int facet_side(const RootSystem& rs, const Alcove& d, int c, const Vec& p)
{
    Vec y = act(rs, invert(rs, d), p);
    return sign(base_facet_value(rs, c, y));
}

/// Covector r and level k with the cotype-c wall of d equal to <x, r> = k,
/// oriented so that r is a positive root.
inline Wall facet_wall(const RootSystem& rs, const Alcove& d, int c)
{
    const Mat& uinv = rs.weyl[rs.inverse[d.finite]];
    const Vec& a = (c == 0) ? rs.roots[rs.highest] : rs.simple_root(c);
    Vec r = mat_vec(transpose(uinv), a);
    std::int64_t k = dot(d.translation, r) + (c == 0 ? 1 : 0);
    int idx = rs.root_index(r);
    if (idx < 0) {
        r = neg(r);
        k = -k;
        idx = rs.root_index(r);
    }
    if (idx < 0) throw std::logic_error("facet covector is not a root");
    return Wall{idx, k};
}

/// Affine reflection across a wall.
inline AffineElement wall_reflection(const RootSystem& rs, const Wall& w)
{
    const Vec& a = rs.roots[w.root];
    const Vec& c = rs.coroots[w.root];
    return AffineElement{scaled(c, w.level), rs.weyl_index(detail::reflection_matrix(a, c, rs.dim))};
}

/// Number of walls separating the alcoves with scaled barycenters p and q.
inline std::int64_t separating_walls(const RootSystem& rs, const Vec& p, const Vec& q)
{
    std::int64_t n = 0;
    for (const Vec& a : rs.roots)
        n += std::llabs(floor_div(dot(p, a), rs.scale) - floor_div(dot(q, a), rs.scale));
    return n;
}

inline std::int64_t distance(const RootSystem& rs, const Alcove& a, const Alcove& b)
{
    return separating_walls(rs, barycenter(rs, a), barycenter(rs, b));
}

inline std::int64_t length(const RootSystem& rs, const AffineElement& g)
{
    return separating_walls(rs, barycenter(rs, g), rs.barycenter);
}

/// Lexicographically least reduced word: repeatedly strip the smallest left descent.
inline std::vector<int> reduced_word(const RootSystem& rs, const AffineElement& g)
{
    std::vector<int> word;
    AffineElement cur = g;
    std::int64_t len = length(rs, cur);
    while (len > 0) {
        bool found = false;
        for (int c = 0; c <= rs.rank; ++c) {
            AffineElement next = compose(rs, simple_reflection(rs, c), cur);
            std::int64_t l = length(rs, next);
            if (l < len) {
                word.push_back(c);
                cur = next;
                len = l;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no descent found");
    }
    return word;
}

inline AffineElement from_word(const RootSystem& rs, const std::vector<int>& word)
{
    AffineElement g = identity_element();
    for (int c : word) g = compose(rs, g, simple_reflection(rs, c));
    return g;
}

/// N(lambda) = lambda + u(lambda) + ... + u^{d-1}(lambda), d = order(u).
inline Vec norm_sum(const RootSystem& rs, int u, const Vec& lambda)
{
    Vec acc = zero_vec();
    Vec v = lambda;
    for (int i = 0; i < rs.order[u]; ++i) {
        acc = add(acc, v);
        v = mat_vec(rs.weyl[u], v);
    }
    return acc;
}

/// Alcove containing a scaled point in its interior.
inline Alcove locate(const RootSystem& rs, const Vec& p)
{
    Alcove g = identity_element();
    for (;;) {
        bool moved = false;
        for (int c = 0; c <= rs.rank; ++c) {
            int s = facet_side(rs, g, c, p);
            if (s == 0) throw std::invalid_argument("point lies on a wall");
            if (s < 0) {
                g = adjacent(rs, g, c);
                moved = true;
                break;
            }
        }
        if (!moved) return g;
    }
}

/// Alcoves sorted by (length, canonical order), grouped in layers.
class LayerTable {
public:
    explicit LayerTable(const RootSystem& rs) : rs_(&rs) { layers_.push_back({identity_element()}); }

    const std::vector<Alcove>& layer(std::size_t n)
    {
        std::lock_guard<std::mutex> lock(mu_);
        grow(n);
        return layers_[n];
    }

    std::vector<Alcove> within(std::size_t radius)
    {
        std::lock_guard<std::mutex> lock(mu_);
        grow(radius);
        std::vector<Alcove> out;
        for (std::size_t i = 0; i <= radius; ++i) out.insert(out.end(), layers_[i].begin(), layers_[i].end());
        return out;
    }

private:
    void grow(std::size_t n)
    {
        while (layers_.size() <= n) {
            const auto& last = layers_.back();
            std::int64_t target = static_cast<std::int64_t>(layers_.size());
            AlcoveSet next;
            for (const Alcove& a : last)
                for (int c = 0; c <= rs_->rank; ++c) {
                    Alcove b = adjacent(*rs_, a, c);
                    if (length(*rs_, b) == target) next.insert(b);
                }
            std::vector<Alcove> v(next.begin(), next.end());
            std::sort(v.begin(), v.end());
            layers_.push_back(std::move(v));
        }
    }

    const RootSystem* rs_;
    std::mutex mu_;
    std::deque<std::vector<Alcove>> layers_;
};

inline LayerTable& layer_table(const RootSystem& rs)
{
    static LayerTable a1(root_system(Kind::A1));
    static LayerTable a2(root_system(Kind::A2));
    static LayerTable c2(root_system(Kind::C2));
    static LayerTable g2(root_system(Kind::G2));
    switch (rs.kind) {
        case Kind::A1: return a1;
        case Kind::A2: return a2;
        case Kind::C2: return c2;
        case Kind::G2: return g2;
    }
    return a1;
}

/// All alcoves at gallery distance <= radius from C_M, in order of length.
inline std::vector<Alcove> alcoves_within(const RootSystem& rs, std::size_t radius)
{
    return layer_table(rs).within(radius);
}

inline std::string vec_string(const RootSystem& rs, const Vec& v)
{
    std::string s;
    for (int i = 0; i < rs.dim; ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

/// Canonical text "t[l1,l2,...]·w<index>".
inline std::string to_string(const RootSystem& rs, const AffineElement& g)
{
    return "t[" + vec_string(rs, g.translation) + "]·w" + std::to_string(g.finite);
}

inline AffineElement parse_element(const RootSystem& rs, const std::string& text)
{
    auto open = text.find('[');
    auto close = text.find(']');
    auto wpos = text.rfind('w');
    if (text.rfind("t[", 0) != 0 || close == std::string::npos || wpos == std::string::npos || wpos < close)
        throw std::invalid_argument("malformed element: " + text);
    AffineElement g;
    std::stringstream ss(text.substr(open + 1, close - open - 1));
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= rs.dim) throw std::invalid_argument("too many coordinates: " + text);
        g.translation[i++] = std::stoll(item);
    }
    if (i != rs.dim) throw std::invalid_argument("wrong coordinate count: " + text);
    g.finite = std::stoi(text.substr(wpos + 1));
    if (g.finite < 0 || g.finite >= static_cast<int>(rs.weyl_size()))
        throw std::invalid_argument("finite index out of range: " + text);
    return g;
}

}  // namespace adlv
