#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <set>

#include "conjugacy.hpp"

namespace adlv {

/// A start alcove and the cotypes crossed from it.
struct GalleryType {
    Alcove start{};
    std::vector<int> labels;

    std::size_t chamber_count() const { return labels.size() + 1; }

    friend auto operator<=>(const GalleryType&, const GalleryType&) = default;
    friend bool operator==(const GalleryType&, const GalleryType&) = default;
};

/// Chambers start, adjacent(start, c_1), ... of the non-folded realization.
inline std::vector<Alcove> realize(const RootSystem& rs, const Alcove& start, const std::vector<int>& labels)
{
    std::vector<Alcove> out{start};
    out.reserve(labels.size() + 1);
    for (int c : labels) out.push_back(adjacent(rs, out.back(), c));
    return out;
}

inline std::vector<Alcove> realize(const RootSystem& rs, const GalleryType& t)
{
    return realize(rs, t.start, t.labels);
}

/// Lexicographically least minimal gallery from a to b.
inline std::vector<int> lex_geodesic(const RootSystem& rs, const Alcove& a, const Alcove& b)
{
    std::vector<int> out;
    Alcove cur = a;
    std::int64_t d = distance(rs, cur, b);
    while (d > 0) {
        for (int c = 0; c <= rs.rank; ++c) {
            Alcove nxt = adjacent(rs, cur, c);
            std::int64_t dn = distance(rs, nxt, b);
            if (dn < d) {
                out.push_back(c);
                cur = nxt;
                d = dn;
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Corridors and regions

/// Half-strip {0 < <x, strip_root> < 1} through C_M heading along `direction`.
struct Corridor {
    Vec direction{};
    int strip_root = -1;  ///< -1 in rank 1, where the strip is the whole line
    bool primary = false;
};

struct SectorData {
    std::vector<Corridor> corridors;  ///< counterclockwise, starting at the first fundamental coweight
    Vec reference{};                  ///< scaled point used to rank candidate corridors
    int i2_corridor = -1;
    int i1_region = -1;  ///< region between corridors i1_region and i1_region + 1; -1 in rank 1
};

namespace detail {

inline Vec primitive(const Vec& v)
{
    std::int64_t g = vec_gcd(v);
    return Vec{v[0] / g, v[1] / g, v[2] / g};
}

inline double picture_angle(const RootSystem& rs, const Vec& v)
{
    double x = 0, y = 0;
    for (int k = 0; k < 3; ++k) {
        x += rs.picture[0][k] * static_cast<double>(v[k]);
        y += rs.picture[1][k] * static_cast<double>(v[k]);
    }
    return std::atan2(y, x);
}

inline SectorData build_sectors(const RootSystem& rs)
{
    SectorData sd;
    std::vector<Vec> fundamental;
    for (int i = 1; i <= rs.rank; ++i) fundamental.push_back(primitive(rs.vertices[i]));
    std::vector<std::pair<double, Corridor>> items;
    const double base = picture_angle(rs, fundamental[0]);
    const double two_pi = 2.0 * 3.14159265358979323846;
    std::vector<Vec> seen;
    for (int i = 0; i < rs.rank; ++i) {
        for (const Mat& m : rs.weyl) {
            Vec d = mat_vec(m, fundamental[i]);
            if (std::find(seen.begin(), seen.end(), d) != seen.end()) continue;
            seen.push_back(d);
            Corridor c;
            c.direction = d;
            c.primary = (i == 0);
            for (std::size_t r = 0; r < rs.roots.size(); ++r)
                if (dot(d, rs.roots[r]) == 0) c.strip_root = static_cast<int>(r);
            double a = picture_angle(rs, d) - base;
            while (a < -1e-9) a += two_pi;
            items.emplace_back(a, c);
        }
    }
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& it : items) sd.corridors.push_back(it.second);

    sd.reference = (rs.kind == Kind::C2) ? rs.vertices[1] : rs.barycenter;

    // Class I2 lives in the secondary corridor opposite a fundamental coweight.
    Vec target = neg(fundamental[0]);
    const int n = static_cast<int>(sd.corridors.size());
    auto find_dir = [&](const Vec& v) {
        for (int i = 0; i < n; ++i)
            if (sd.corridors[i].direction == v) return i;
        return -1;
    };
    int idx = find_dir(target);
    if (rs.rank == 2 && sd.corridors[idx].primary) idx = find_dir(neg(fundamental[1]));
    sd.i2_corridor = idx;
    if (rs.rank == 2) sd.i1_region = (idx + n - 1) % n;
    return sd;
}

}  // namespace detail

inline const SectorData& sectors(const RootSystem& rs)
{
    static const SectorData a1 = detail::build_sectors(root_system(Kind::A1));
    static const SectorData a2 = detail::build_sectors(root_system(Kind::A2));
    static const SectorData c2 = detail::build_sectors(root_system(Kind::C2));
    static const SectorData g2 = detail::build_sectors(root_system(Kind::G2));
    switch (rs.kind) {
        case Kind::A1: return a1;
        case Kind::A2: return a2;
        case Kind::C2: return c2;
        case Kind::G2: return g2;
    }
    return a1;
}

/// Corridor containing T, if any.  Among several candidate half-strips the one
/// whose direction makes the smallest angle with T wins; exact ties go to the
/// secondary corridor, then to the lower index.
inline std::optional<int> corridor_of(const RootSystem& rs, const Alcove& t)
{
    if (t == identity_element()) return std::nullopt;
    const SectorData& sd = sectors(rs);
    Vec p = barycenter(rs, t);
    Vec off = sub(p, sd.reference);
    int best = -1;
    __int128 best_num = 0, best_den = 1;
    for (int i = 0; i < static_cast<int>(sd.corridors.size()); ++i) {
        const Corridor& c = sd.corridors[i];
        if (c.strip_root >= 0) {
            std::int64_t q = dot(p, rs.roots[c.strip_root]);
            if (q <= 0 || q >= rs.scale) continue;
        }
        std::int64_t proj = rs.inner(off, c.direction);
        if (proj <= 0) continue;
        __int128 num = static_cast<__int128>(proj) * proj;
        __int128 den = rs.inner(c.direction, c.direction);
        if (best < 0) {
            best = i;
            best_num = num;
            best_den = den;
            continue;
        }
        __int128 lhs = num * best_den, rhs = best_num * den;
        bool better = lhs > rhs || (lhs == rhs && !c.primary && sd.corridors[best].primary);
        if (better) {
            best = i;
            best_num = num;
            best_den = den;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

/// Region index r: T lies in the closed-open cone from corridor r's ray to corridor r+1's.
inline int region_of(const RootSystem& rs, const Alcove& t)
{
    const SectorData& sd = sectors(rs);
    Vec off = sub(barycenter(rs, t), rs.barycenter);
    const int n = static_cast<int>(sd.corridors.size());
    if (rs.rank == 1) return dot(off, sd.corridors[0].direction) > 0 ? 0 : 1;
    for (int i = 0; i < n; ++i) {
        const Vec& a = sd.corridors[i].direction;
        const Vec& b = sd.corridors[(i + 1) % n].direction;
        std::int64_t x = rs.frame_cross(a, off);
        std::int64_t y = rs.frame_cross(off, b);
        if (x == 0 && dot(rs.frame[0], a) * dot(rs.frame[0], off) + dot(rs.frame[1], a) * dot(rs.frame[1], off) > 0)
            return i;
        if (x > 0 && y > 0) return i;
    }
    throw std::logic_error("region not found");
}

namespace detail {

class CorridorWalks {
public:
    explicit CorridorWalks(const RootSystem& rs) : rs_(&rs), walks_(sectors(rs).corridors.size()) {}

    /// The first alcove of length m assigned to corridor i, if any.
    std::optional<Alcove> at(int i, std::size_t m)
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto& w = walks_[i];
        while (w.size() <= m) {
            std::optional<Alcove> pick;
            if (w.empty()) {
                pick = identity_element();
            } else {
                for (const Alcove& a : layer_table(*rs_).layer(w.size()))
                    if (corridor_of(*rs_, a) == i) {
                        pick = a;
                        break;
                    }
            }
            w.push_back(pick);
        }
        return w[m];
    }

private:
    const RootSystem* rs_;
    std::mutex mu_;
    std::vector<std::vector<std::optional<Alcove>>> walks_;
};

inline CorridorWalks& corridor_walks(const RootSystem& rs)
{
    static CorridorWalks a1(root_system(Kind::A1));
    static CorridorWalks a2(root_system(Kind::A2));
    static CorridorWalks c2(root_system(Kind::C2));
    static CorridorWalks g2(root_system(Kind::G2));
    switch (rs.kind) {
        case Kind::A1: return a1;
        case Kind::A2: return a2;
        case Kind::C2: return c2;
        case Kind::G2: return g2;
    }
    return a1;
}

}  // namespace detail

/// Standard minimal gallery with its classification.
struct SmgInfo {
    GalleryType gallery;
    bool corridor = false;
    int sector = -1;     ///< corridor index, or region index
    int primary = -1;    ///< region targets: the primary corridor bounding the region
    int secondary = -1;  ///< region targets: the secondary corridor bounding the region
    int turning = 0;     ///< 1-based step of the turn; departures need index + 1 < turning
    std::vector<Alcove> chambers;

    bool departure_allowed(std::size_t k) const
    {
        return k < gallery.labels.size() && static_cast<int>(k) + 1 < turning;
    }
};

/// Wall crossed at step i of a realization is parallel to direction d.
inline bool crossing_parallel(const RootSystem& rs, const Alcove& from, int c, const Vec& d)
{
    Wall w = facet_wall(rs, from, c);
    return dot(d, rs.roots[w.root]) == 0;
}

inline SmgInfo smg_info(const RootSystem& rs, const Alcove& t)
{
    SmgInfo info;
    info.gallery.start = identity_element();
    if (t == identity_element()) {
        info.chambers = {t};
        return info;
    }
    const SectorData& sd = sectors(rs);
    const std::int64_t n = length(rs, t);
    if (auto ci = corridor_of(rs, t)) {
        info.corridor = true;
        info.sector = *ci;
        info.gallery.labels = reduced_word(rs, t);
        info.turning = static_cast<int>(n) + 1;
        info.chambers = realize(rs, info.gallery);
        return info;
    }
    const int r = region_of(rs, t);
    const int nc = static_cast<int>(sd.corridors.size());
    const int a = r, b = (r + 1) % nc;
    info.sector = r;
    info.primary = sd.corridors[a].primary ? a : b;
    info.secondary = sd.corridors[a].primary ? b : a;
    auto& walks = detail::corridor_walks(rs);
    for (std::int64_t m = n; m >= 0; --m) {
        auto am = walks.at(info.primary, static_cast<std::size_t>(m));
        if (!am) continue;
        if (length(rs, *am) + distance(rs, *am, t) == n) {
            info.gallery.labels = reduced_word(rs, *am);
            auto rest = lex_geodesic(rs, *am, t);
            info.gallery.labels.insert(info.gallery.labels.end(), rest.begin(), rest.end());
            break;
        }
    }
    info.chambers = realize(rs, info.gallery);
    const Vec& d = sd.corridors[info.secondary].direction;
    int last = -1;
    for (std::size_t i = 0; i < info.gallery.labels.size(); ++i)
        if (crossing_parallel(rs, info.chambers[i], info.gallery.labels[i], d)) last = static_cast<int>(i);
    info.turning = last + 2;
    return info;
}

inline GalleryType smg(const RootSystem& rs, const Alcove& t) { return smg_info(rs, t).gallery; }

// ---------------------------------------------------------------------------
// Minimal galleries

/// Layered DAG of all minimal galleries between two alcove sets, taken over
/// the pairs that realize the minimum distance.  Node j of layer i is an
/// alcove; every node lies on some full path.
struct GeodesicDag {
    struct Edge {
        int from;
        int label;
        int to;
    };
    std::vector<std::vector<Alcove>> layers;
    std::vector<std::vector<Edge>> edges;  ///< edges[i] joins layer i to layer i + 1

    std::size_t steps() const { return layers.empty() ? 0 : layers.size() - 1; }

    /// Number of distinct label sequences.
    std::uint64_t path_count() const { return expand(0).size(); }

    /// All label sequences, deduplicated and sorted; limit 0 means unbounded.
    std::vector<std::vector<int>> expand(std::size_t limit) const
    {
        std::vector<std::set<std::vector<int>>> seqs(layers.empty() ? 0 : layers.back().size());
        std::vector<std::set<std::vector<int>>> cur(layers.empty() ? 0 : layers[0].size(), {{}});
        for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
            std::vector<std::set<std::vector<int>>> nxt(layers[i + 1].size());
            for (const Edge& e : edges[i])
                for (const auto& s : cur[e.from]) {
                    auto t = s;
                    t.push_back(e.label);
                    nxt[e.to].insert(std::move(t));
                    if (limit && nxt[e.to].size() > limit) throw std::length_error("too many minimal galleries");
                }
            cur = std::move(nxt);
        }
        std::set<std::vector<int>> all;
        for (auto& s : cur) all.insert(s.begin(), s.end());
        return {all.begin(), all.end()};
    }

    /// Lexicographically least label sequence.
    std::vector<int> canonical() const
    {
        std::vector<int> out;
        if (layers.empty()) return out;
        std::set<int> frontier;
        for (std::size_t j = 0; j < layers[0].size(); ++j) frontier.insert(static_cast<int>(j));
        for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
            int best = 1 << 30;
            for (const Edge& e : edges[i])
                if (frontier.count(e.from)) best = std::min(best, e.label);
            std::set<int> nxt;
            for (const Edge& e : edges[i])
                if (frontier.count(e.from) && e.label == best) nxt.insert(e.to);
            out.push_back(best);
            frontier = std::move(nxt);
        }
        return out;
    }
};

inline GeodesicDag geodesic_dag(const RootSystem& rs, const std::vector<Alcove>& sources,
                                const std::vector<Alcove>& targets)
{
    std::int64_t dmin = -1;
    for (const Alcove& a : sources)
        for (const Alcove& b : targets) {
            std::int64_t d = distance(rs, a, b);
            if (dmin < 0 || d < dmin) dmin = d;
        }
    GeodesicDag dag;
    dag.layers.resize(static_cast<std::size_t>(dmin) + 1);
    std::vector<std::map<Alcove, int>> index(dag.layers.size());
    auto add_node = [&](std::size_t layer, const Alcove& x) {
        auto [it, fresh] = index[layer].emplace(x, 0);
        if (fresh) {
            it->second = static_cast<int>(dag.layers[layer].size());
            dag.layers[layer].push_back(x);
        }
    };
    for (const Alcove& a : sources)
        for (const Alcove& b : targets) {
            if (distance(rs, a, b) != dmin) continue;
            // Walk outward from a, keeping alcoves that still lie on an a-b geodesic.
            std::vector<Alcove> layer{a};
            add_node(0, a);
            for (std::int64_t i = 0; i < dmin; ++i) {
                std::set<Alcove> nxt;
                for (const Alcove& x : layer)
                    for (int c = 0; c <= rs.rank; ++c) {
                        Alcove y = adjacent(rs, x, c);
                        if (distance(rs, y, b) == dmin - i - 1) nxt.insert(y);
                    }
                layer.assign(nxt.begin(), nxt.end());
                for (const Alcove& y : layer) add_node(static_cast<std::size_t>(i + 1), y);
            }
        }
    dag.edges.resize(dag.steps());
    for (std::size_t i = 0; i < dag.steps(); ++i)
        for (std::size_t j = 0; j < dag.layers[i].size(); ++j)
            for (int c = 0; c <= rs.rank; ++c) {
                auto it = index[i + 1].find(adjacent(rs, dag.layers[i][j], c));
                if (it != index[i + 1].end())
                    dag.edges[i].push_back({static_cast<int>(j), c, it->second});
            }
    return dag;
}

/// Every minimal gallery from a to b, and the alcoves they visit.
struct MinimalGalleries {
    std::vector<GalleryType> galleries;
    std::vector<Alcove> parallelogram;
};

inline MinimalGalleries minimal_galleries(const RootSystem& rs, const Alcove& a, const Alcove& b)
{
    GeodesicDag dag = geodesic_dag(rs, {a}, {b});
    MinimalGalleries out;
    for (auto& labels : dag.expand(0)) out.galleries.push_back(GalleryType{a, std::move(labels)});
    std::set<Alcove> all;
    for (const auto& layer : dag.layers) all.insert(layer.begin(), layer.end());
    out.parallelogram.assign(all.begin(), all.end());
    return out;
}

// ---------------------------------------------------------------------------
// Composite galleries

struct DepartureSpec {
    std::size_t index = 0;  ///< the edge between chambers index and index + 1 of the SMG
    Wall wall{};
};

inline DepartureSpec make_departure(const RootSystem& rs, const SmgInfo& info, std::size_t k)
{
    if (k >= info.gallery.labels.size()) throw std::out_of_range("departure index past the gallery");
    return DepartureSpec{k, facet_wall(rs, info.chambers[k], info.gallery.labels[k])};
}

enum class Gamma2Choice { Canonical, All };

/// A set of gallery types sharing a prefix and suffix, with every minimal
/// middle gallery encoded once in a DAG.
struct GalleryFamily {
    Alcove start{};
    std::vector<int> prefix;
    std::optional<GeodesicDag> middle;
    std::vector<int> suffix;

    std::size_t label_count() const { return prefix.size() + (middle ? middle->steps() : 0) + suffix.size(); }

    GalleryType canonical() const
    {
        GalleryType t{start, prefix};
        if (middle) {
            auto m = middle->canonical();
            t.labels.insert(t.labels.end(), m.begin(), m.end());
        }
        t.labels.insert(t.labels.end(), suffix.begin(), suffix.end());
        return t;
    }

    std::vector<GalleryType> expand(std::size_t limit = 0) const
    {
        if (!middle) return {canonical()};
        std::vector<GalleryType> out;
        for (const auto& m : middle->expand(limit)) {
            GalleryType t{start, prefix};
            t.labels.insert(t.labels.end(), m.begin(), m.end());
            t.labels.insert(t.labels.end(), suffix.begin(), suffix.end());
            out.push_back(std::move(t));
        }
        return out;
    }
};

/// The family for departure k of an SMG with labels `smg_labels` from C_M.
///
/// The type reads the post-departure part backwards, crosses the departure
/// wall, and (for b != 1) follows a minimal gallery from the departure edge to
/// its t_lambda translate before repeating the post-departure part.
inline GalleryFamily composite_family(const RootSystem& rs, const std::vector<int>& smg_labels, std::size_t k,
                                      const ConjugacyRep& b)
{
    if (k >= smg_labels.size()) throw std::out_of_range("departure index past the gallery");
    GalleryFamily fam;
    fam.start = identity_element();
    std::vector<int> tail(smg_labels.begin() + static_cast<std::ptrdiff_t>(k) + 1, smg_labels.end());
    const int c = smg_labels[k];
    fam.prefix.assign(tail.rbegin(), tail.rend());
    fam.prefix.push_back(c);
    if (!b.is_identity()) {
        auto h = realize(rs, identity_element(), std::vector<int>(smg_labels.begin(), smg_labels.begin() + static_cast<std::ptrdiff_t>(k) + 1));
        const Alcove& hk = h[k];
        const Alcove& hk1 = h[k + 1];
        AffineElement t = translation_element(b.lambda);
        fam.middle = geodesic_dag(rs, {hk, hk1}, {compose(rs, t, hk), compose(rs, t, hk1)});
        fam.suffix.push_back(c);
    }
    fam.suffix.insert(fam.suffix.end(), tail.begin(), tail.end());
    return fam;
}

inline std::vector<GalleryType> composite(const RootSystem& rs, const SmgInfo& smg_t, const DepartureSpec& dep,
                                          const ConjugacyRep& b, Gamma2Choice choice)
{
    if (!smg_t.departure_allowed(dep.index))
        throw std::invalid_argument("departure at or after the turning edge");
    GalleryFamily fam = composite_family(rs, smg_t.gallery.labels, dep.index, b);
    if (choice == Gamma2Choice::Canonical) return {fam.canonical()};
    return fam.expand();
}

}  // namespace adlv
