#pragma once

#include <set>

#include "chamber_set.hpp"
#include "folding.hpp"
#include "symmetry.hpp"

namespace adlv {

/// True when t_lambda * w lies in the basic class: N_w(lambda) = 0.
inline bool norm_zero(const RootSystem& rs, const AffineElement& g)
{
    return is_zero(norm_sum(rs, g.finite, g.translation));
}

inline ChamberSet make_subset(const RootSystem& rs, const ConjugacyRep& b, std::int64_t radius)
{
    ChamberSet out;
    out.group = rs.kind;
    out.b = b;
    out.kind = SetKind::Subset;
    out.window.radius = radius;
    return out;
}

/// Adds chambers to a subset, keeping the first provenance seen.
inline void subset_insert(ChamberSet& s, const Alcove& a, Provenance p)
{
    auto it = std::lower_bound(s.chambers.begin(), s.chambers.end(), a);
    if (it != s.chambers.end() && *it == a) return;
    s.chambers.insert(it, a);
    s.provenance.emplace(a, std::move(p));
}

/// All alcoves t_lambda w C_M in the window with N_w(lambda) = 0.
inline ChamberSet kr_seed(Kind kind, const ConjugacyRep& b, std::int64_t radius)
{
    if (!b.is_identity()) throw std::invalid_argument("kr_seed applies to b = 1 only");
    const RootSystem& rs = root_system(kind);
    ChamberSet out = make_subset(rs, b, radius);
    for (const Alcove& a : alcoves_within(rs, static_cast<std::size_t>(radius)))
        if (norm_zero(rs, a)) subset_insert(out, a, Provenance{"kr-seed", std::nullopt, "norm=0"});
    return out;
}

inline ChamberSet kr_seed(Kind kind, std::int64_t radius) { return kr_seed(kind, identity_rep(kind), radius); }

/// Chambers derivable from `w` in one rule application, with the rule used.
inline std::vector<std::pair<Alcove, Provenance>> closure_successors(const RootSystem& rs, const Alcove& w,
                                                                     const std::vector<SymmetryOp>& ops)
{
    std::vector<std::pair<Alcove, Provenance>> out;
    const std::int64_t lw = length(rs, w);
    for (int c = 0; c <= rs.rank; ++c) {
        const AffineElement& s = simple_reflection(rs, c);
        Alcove sw = compose(rs, s, w);
        Alcove ws = compose(rs, w, s);
        const std::int64_t lsw = length(rs, sw), lws = length(rs, ws);
        const std::string tag = "s" + std::to_string(c);
        if (lsw > lw && lws < lw) out.push_back({sw, Provenance{"A-left", w, tag}});
        if (lws > lw && lsw < lw) out.push_back({ws, Provenance{"A-right", w, tag}});
        Alcove sws = compose(rs, sw, s);
        if (sws != w && length(rs, sws) == lw) out.push_back({sws, Provenance{"B", w, tag}});
    }
    for (const auto& op : ops) out.push_back({symmetry_apply(rs, op, w), Provenance{"C", w, symmetry_name(op.kind)}});
    return out;
}

/// Least superset of `seed` inside the window closed under the length rules
/// and the symmetries.  max_passes < 0 means no limit; a pass processes the
/// current worklist snapshot.
inline ChamberSet closure_expand(const ChamberSet& seed, std::int64_t radius, int max_passes = -1)
{
    const RootSystem& rs = root_system(seed.group);
    const auto ops = symmetry_ops(rs);
    ChamberSet out = seed;
    out.kind = SetKind::Subset;
    out.window.radius = radius;
    out.chambers = canonical_within(rs, seed.chambers, radius);
    std::map<Alcove, Provenance> prov;
    for (const Alcove& a : out.chambers) {
        auto it = seed.provenance.find(a);
        prov.emplace(a, it != seed.provenance.end() ? it->second : Provenance{"seed", std::nullopt, ""});
    }
    auto key = [&](const Alcove& a) { return std::pair{length(rs, a), a}; };
    std::set<std::pair<std::int64_t, Alcove>> work;
    for (const Alcove& a : out.chambers) work.insert(key(a));
    for (int pass = 0; !work.empty() && (max_passes < 0 || pass < max_passes); ++pass) {
        std::set<std::pair<std::int64_t, Alcove>> next;
        for (const auto& [_, w] : work) {
            for (auto& [a, p] : closure_successors(rs, w, ops)) {
                if (length(rs, a) > radius || prov.count(a)) continue;
                prov.emplace(a, std::move(p));
                next.insert(key(a));
            }
        }
        work = std::move(next);
    }
    out.chambers.clear();
    for (const auto& [a, _] : prov) out.chambers.push_back(a);
    out.provenance = std::move(prov);
    return out;
}

/// Reference closure: rescans the whole window until nothing changes.
inline std::vector<Alcove> closure_bruteforce(Kind kind, const std::vector<Alcove>& seed, std::int64_t radius)
{
    const RootSystem& rs = root_system(kind);
    const auto ops = symmetry_ops(rs);
    std::set<Alcove> s;
    for (const Alcove& a : seed)
        if (length(rs, a) <= radius) s.insert(a);
    const auto window = alcoves_within(rs, static_cast<std::size_t>(radius));
    for (bool changed = true; changed;) {
        changed = false;
        for (const Alcove& w : window) {
            if (!s.count(w)) continue;
            for (const auto& [a, _] : closure_successors(rs, w, ops))
                if (length(rs, a) <= radius && s.insert(a).second) changed = true;
        }
    }
    return {s.begin(), s.end()};
}

/// Folds the type [c] + word(tilde_b) + [c] from C_M for every reduced word
/// of tilde_b; returns the chamber when some word folds to a single chamber.
inline std::optional<Alcove> appendage_certify(Kind kind, const AffineElement& tilde_b, int c,
                                               std::size_t word_limit = 256)
{
    const RootSystem& rs = root_system(kind);
    if (!norm_zero(rs, tilde_b)) throw std::invalid_argument("tilde_b is not in the basic class");
    if (c < 0 || c > rs.rank) throw std::invalid_argument("neighbor label out of range");
    auto words = geodesic_dag(rs, {identity_element()}, {tilde_b}).expand(word_limit);
    for (const auto& w : words) {
        std::vector<int> labels{c};
        labels.insert(labels.end(), w.begin(), w.end());
        labels.push_back(c);
        auto res = fold_all(rs, GalleryType{identity_element(), labels});
        if (res.size() == 1) return res.front();
    }
    return std::nullopt;
}

/// Replays a provenance chain back to a seed; false if any step does not follow from its rule.
inline bool replay_provenance(const ChamberSet& s, const Alcove& a)
{
    const RootSystem& rs = root_system(s.group);
    const auto ops = symmetry_ops(rs);
    Alcove cur = a;
    for (std::size_t guard = 0; guard <= s.provenance.size(); ++guard) {
        auto it = s.provenance.find(cur);
        if (it == s.provenance.end()) return false;
        const Provenance& p = it->second;
        if (p.rule == "appendage") {
            int c = std::stoi(p.detail.substr(1));
            return p.parent && appendage_certify(s.group, *p.parent, c) == cur;
        }
        if (!p.parent) return true;
        if (!s.contains(*p.parent)) return false;
        bool ok = false;
        for (const auto& [b, q] : closure_successors(rs, *p.parent, ops))
            if (b == cur && q.rule == p.rule && q.detail == p.detail) ok = true;
        if (!ok) return false;
        cur = *p.parent;
    }
    return false;
}

/// Appendage results over every norm-zero tilde_b in the window and every neighbor label.
inline ChamberSet appendage_seed(Kind kind, std::int64_t radius)
{
    const RootSystem& rs = root_system(kind);
    ChamberSet out = make_subset(rs, identity_rep(kind), radius);
    for (const Alcove& t : alcoves_within(rs, static_cast<std::size_t>(radius))) {
        if (!norm_zero(rs, t)) continue;
        for (int c = 0; c <= rs.rank; ++c) {
            auto a = appendage_certify(kind, t, c);
            if (a && length(rs, *a) <= radius)
                subset_insert(out, *a, Provenance{"appendage", t, "s" + std::to_string(c)});
        }
    }
    return out;
}

/// Rank one: inv(x, b x) for F-rational chambers x of the tree, b = t_s.
/// A chamber x hanging at depth d >= 1 from the apartment vertex v has its
/// geodesic to b x through v and b v, and inv(x, b x) is read off its type.
inline ChamberSet tree_seed(const ConjugacyRep& b, std::int64_t radius)
{
    if (b.kind != Kind::A1) throw std::invalid_argument("tree_seed is rank one only");
    const RootSystem& rs = root_system(Kind::A1);
    ChamberSet out = make_subset(rs, b, radius);
    if (b.is_identity()) return out;
    const AffineElement bt = translation_element(b.lambda);
    const std::int64_t step = rs.vertices[1][0] - rs.vertices[0][0];
    const std::int64_t dir = b.lambda[0] > 0 ? 1 : -1;
    for (std::int64_t vi = -2; vi <= 2; ++vi) {
        const std::int64_t v = vi * step;
        // a: apartment chamber at v facing b v; a2: the one behind it.
        Alcove a = locate(rs, Vec{v + dir * step / 2, 0, 0});
        Alcove a2 = locate(rs, Vec{v - dir * step / 2, 0, 0});
        int cv = -1;
        for (int c = 0; c <= rs.rank; ++c)
            if (adjacent(rs, a, c) == a2) cv = c;
        const int other = 1 - cv;
        std::vector<int> middle = lex_geodesic(rs, a, compose(rs, bt, a2));
        for (std::int64_t d = 1; 2 * d + static_cast<std::int64_t>(middle.size()) <= radius; ++d) {
            std::vector<int> word;
            for (std::int64_t k = d - 1; k >= 1; --k) word.push_back(k % 2 ? other : cv);
            word.push_back(cv);
            word.insert(word.end(), middle.begin(), middle.end());
            word.push_back(cv);
            for (std::int64_t k = 1; k <= d - 1; ++k) word.push_back(k % 2 ? other : cv);
            Alcove x = from_word(rs, word);
            if (length(rs, x) != static_cast<std::int64_t>(word.size()))
                throw std::logic_error("tree geodesic type is not reduced");
            subset_insert(out, x,
                          Provenance{"tree-rational", std::nullopt, "v=" + std::to_string(vi) + " d=" + std::to_string(d)});
        }
    }
    return out;
}

/// Certified-nonempty chambers.  b = 1: KR seeds and appendages closed under
/// the rules.  b != 1: the W-conjugates (and, in rank one, the tree chambers)
/// closed under the rules, flagged partial.
inline ChamberSet subset(Kind kind, const ConjugacyRep& b, std::int64_t radius, bool seed_only = false)
{
    const RootSystem& rs = root_system(kind);
    ChamberSet seed;
    if (b.is_identity()) {
        seed = kr_seed(kind, b, radius);
        ChamberSet app = appendage_seed(kind, radius);
        for (const Alcove& a : app.chambers) subset_insert(seed, a, app.provenance.at(a));
    } else {
        seed = make_subset(rs, b, radius);
        for (const Alcove& a : w_conjugates(rs, b))
            if (length(rs, a) <= radius) subset_insert(seed, a, Provenance{"w-conjugate", std::nullopt, ""});
        if (kind == Kind::A1) {
            ChamberSet tree = tree_seed(b, radius);
            for (const Alcove& a : tree.chambers) subset_insert(seed, a, tree.provenance.at(a));
        }
        seed.flags.insert("partial");
    }
    if (kind == Kind::G2) seed.flags.insert("unvalidated");
    if (seed_only) {
        seed.flags.insert("seed-only");
        return seed;
    }
    return closure_expand(seed, radius);
}

}  // namespace adlv
