#pragma once

#include <functional>
#include <optional>

#include "gallery.hpp"

namespace adlv {

/// Prune states that can no longer end within `radius` of C_M.
struct FoldWindow {
    std::optional<std::int64_t> radius;

    bool keep(const RootSystem& rs, const Alcove& a, std::size_t remaining) const
    {
        return !radius || length(rs, a) - static_cast<std::int64_t>(remaining) <= *radius;
    }
};

/// Crossing the cotype-c wall of d is forced when C_M lies on d's side.
inline bool is_choice_point(const RootSystem& rs, const Alcove& d, int c)
{
    return facet_side(rs, d, c, rs.barycenter) < 0;
}

inline void fold_step_into(const RootSystem& rs, const Alcove& d, int c, AlcoveSet& out)
{
    out.insert(adjacent(rs, d, c));
    if (is_choice_point(rs, d, c)) out.insert(d);
}

inline AlcoveSet fold_step(const RootSystem& rs, const AlcoveSet& cur, int c, const FoldWindow& win,
                           std::size_t remaining)
{
    AlcoveSet next;
    next.reserve(cur.size() * 2);
    for (const Alcove& d : cur) {
        Alcove r = adjacent(rs, d, c);
        if (win.keep(rs, r, remaining)) next.insert(r);
        if (is_choice_point(rs, d, c) && win.keep(rs, d, remaining)) next.insert(d);
    }
    return next;
}

inline std::vector<Alcove> sorted_alcoves(const AlcoveSet& s)
{
    std::vector<Alcove> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    return v;
}

/// Endpoint of the always-reflect folding.
inline Alcove fold_standard(const RootSystem& rs, const GalleryType& t)
{
    Alcove a = t.start;
    for (int c : t.labels) a = adjacent(rs, a, c);
    return a;
}

/// Choice points met along the standard (non-folded) realization.
inline std::size_t choice_point_count(const RootSystem& rs, const GalleryType& t)
{
    std::size_t n = 0;
    Alcove a = t.start;
    for (int c : t.labels) {
        if (is_choice_point(rs, a, c)) ++n;
        a = adjacent(rs, a, c);
    }
    return n;
}

/// Folding results: the set of possible final chambers.  States at each
/// step are merged, so every (step, alcove) pair is expanded once.
inline std::vector<Alcove> fold_all(const RootSystem& rs, const GalleryType& t, const FoldWindow& win = {})
{
    AlcoveSet cur{t.start};
    const std::size_t n = t.labels.size();
    for (std::size_t i = 0; i < n; ++i) cur = fold_step(rs, cur, t.labels[i], win, n - i - 1);
    return sorted_alcoves(cur);
}

/// Reference enumeration of every folded chamber sequence, without merging.
inline std::vector<Alcove> fold_naive(const RootSystem& rs, const GalleryType& t, std::size_t bound = 16)
{
    if (t.labels.size() > bound) throw std::length_error("gallery type longer than the oracle bound");
    std::set<Alcove> out;
    std::function<void(std::size_t, const Alcove&)> rec = [&](std::size_t i, const Alcove& d) {
        if (i == t.labels.size()) {
            out.insert(d);
            return;
        }
        int c = t.labels[i];
        rec(i + 1, adjacent(rs, d, c));
        if (facet_side(rs, d, c, rs.barycenter) < 0) rec(i + 1, d);
    };
    rec(0, t.start);
    return {out.begin(), out.end()};
}

/// Folding results of every type in a family, sharing work across middle galleries.
inline std::vector<Alcove> fold_family(const RootSystem& rs, const GalleryFamily& fam, const FoldWindow& win = {})
{
    const std::size_t total = fam.label_count();
    std::size_t done = 0;
    AlcoveSet cur{fam.start};
    for (int c : fam.prefix) cur = fold_step(rs, cur, c, win, total - ++done);
    if (fam.middle) {
        const GeodesicDag& dag = *fam.middle;
        std::vector<AlcoveSet> node(dag.layers[0].size(), cur);
        for (std::size_t i = 0; i < dag.steps(); ++i) {
            std::vector<AlcoveSet> next(dag.layers[i + 1].size());
            ++done;
            for (const auto& e : dag.edges[i]) {
                AlcoveSet s = fold_step(rs, node[e.from], e.label, win, total - done);
                next[e.to].insert(s.begin(), s.end());
            }
            node = std::move(next);
        }
        cur.clear();
        for (auto& s : node) cur.insert(s.begin(), s.end());
    }
    for (int c : fam.suffix) cur = fold_step(rs, cur, c, win, total - ++done);
    return sorted_alcoves(cur);
}

/// Union of the folding results of the suffixes chambers[i..] (i < labels.size()),
/// each started at its own chamber of the given realization.
inline std::vector<Alcove> fold_left_infinite(const RootSystem& rs, const std::vector<Alcove>& chambers,
                                              const std::vector<int>& labels, const FoldWindow& win = {})
{
    if (chambers.size() != labels.size() + 1) throw std::invalid_argument("realization does not match labels");
    AlcoveSet cur;
    const std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (win.keep(rs, chambers[i], n - i)) cur.insert(chambers[i]);
        cur = fold_step(rs, cur, labels[i], win, n - i - 1);
    }
    return sorted_alcoves(cur);
}

}  // namespace adlv
