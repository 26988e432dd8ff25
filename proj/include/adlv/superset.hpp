#pragma once

#include "chamber_set.hpp"
#include "classes.hpp"
#include "parallel.hpp"
#include "symmetry.hpp"

namespace adlv {

enum class SupersetMethod { Classes, Complete, HalfInfinite };

inline const char* method_name(SupersetMethod m)
{
    switch (m) {
        case SupersetMethod::Classes: return "classes";
        case SupersetMethod::Complete: return "complete";
        case SupersetMethod::HalfInfinite: return "halfinf";
    }
    return "?";
}

namespace detail {

struct ClassTask {
    ClassKind cls;
    int p;
    int w;
};

inline std::vector<ClassTask> class_tasks(const RootSystem& rs, int p_max)
{
    std::vector<ClassTask> tasks;
    for (int w = 0; w < static_cast<int>(rs.weyl_size()); ++w) tasks.push_back({ClassKind::I2, 0, w});
    if (rs.rank == 2)
        for (int p = 1; p <= p_max; p += 2)
            for (int w = 0; w < static_cast<int>(rs.weyl_size()); ++w) tasks.push_back({ClassKind::I1, p, w});
    return tasks;
}

/// Seeds every superset contains, symmetry closure, window and flags.
inline ChamberSet finish_superset(const RootSystem& rs, const ConjugacyRep& b, const Budgets& bud, AlcoveSet acc,
                                  bool truncated)
{
    for (const Alcove& a : w_conjugates(rs, b)) acc.insert(a);
    if (b.is_identity()) acc.insert(identity_element());
    acc = symmetry_closure(rs, acc);
    ChamberSet out;
    out.group = rs.kind;
    out.b = b;
    out.kind = SetKind::Superset;
    out.window = WindowInfo{bud.radius, bud.p_max, bud.q_max, bud.dep_budget, bud.stability_window, truncated};
    out.chambers = canonical_within(rs, acc, bud.radius);
    if (rs.kind == Kind::G2) out.flags.insert("unvalidated");
    if (truncated) out.flags.insert("truncated");
    return out;
}

inline void prepare_instances(const RootSystem& rs, const Budgets& bud)
{
    ClassParams probe{ClassKind::I2, 0, bud.q_max, 0};
    probe.p = 0;
    instance_index(rs).instances(probe, static_cast<std::size_t>(bud.p_max + bud.q_max) + 2 * rs.weyl_size() + 4);
}

}  // namespace detail

/// Union of the q-limits of classes I1 and I2 over p <= p_max and all w.
inline ChamberSet superset_classes(Kind kind, const ConjugacyRep& b, const Budgets& bud)
{
    const RootSystem& rs = root_system(kind);
    detail::prepare_instances(rs, bud);
    auto tasks = detail::class_tasks(rs, bud.p_max);
    auto results = parallel_map<FoldLimit>(tasks.size(), bud.threads, [&](std::size_t i) {
        const auto& t = tasks[i];
        return fold_limit(rs, t.cls, t.p, t.w, b, bud.q_max, bud.stability_window, bud.radius);
    });
    AlcoveSet acc;
    bool truncated = false;
    for (const auto& r : results) {
        acc.insert(r.chambers.begin(), r.chambers.end());
        if (!r.stable && r.last_q >= 0) truncated = true;
    }
    return detail::finish_superset(rs, b, bud, std::move(acc), truncated);
}

/// Folding results of every pre-turning type-edge pair whose SMG target has
/// length <= dep_budget.  No symmetry, seeds or class families are added.
inline std::vector<Alcove> type_edge_results(Kind kind, const ConjugacyRep& b, const Budgets& bud)
{
    const RootSystem& rs = root_system(kind);
    std::vector<Alcove> targets;
    for (int n = 1; n <= bud.dep_budget; ++n) {
        const auto& layer = layer_table(rs).layer(static_cast<std::size_t>(n));
        targets.insert(targets.end(), layer.begin(), layer.end());
    }
    for (const Alcove& t : targets) (void)smg_info(rs, t);  // fill shared caches before going parallel
    FoldWindow win{bud.radius};
    auto results = parallel_map<std::vector<Alcove>>(targets.size(), bud.threads, [&](std::size_t i) {
        SmgInfo info = smg_info(rs, targets[i]);
        AlcoveSet acc;
        for (std::size_t k = 0; k < info.gallery.labels.size(); ++k) {
            if (!info.departure_allowed(k)) continue;
            auto res = fold_family(rs, composite_family(rs, info.gallery.labels, k, b), win);
            acc.insert(res.begin(), res.end());
        }
        return sorted_alcoves(acc);
    });
    AlcoveSet acc;
    for (const auto& r : results) acc.insert(r.begin(), r.end());
    return sorted_alcoves(acc);
}

/// Type-edge enumeration up to dep_budget, joined with the class families so
/// that the result always contains superset_classes for the same budgets.
inline ChamberSet superset_complete(Kind kind, const ConjugacyRep& b, const Budgets& bud)
{
    const RootSystem& rs = root_system(kind);
    ChamberSet classes = superset_classes(kind, b, bud);
    auto edges = type_edge_results(kind, b, bud);
    AlcoveSet acc(classes.chambers.begin(), classes.chambers.end());
    acc.insert(edges.begin(), edges.end());
    ChamberSet out = detail::finish_superset(rs, b, bud, std::move(acc), classes.window.truncated);
    out.flags.insert("complete");
    return out;
}

/// Class method through the half-infinite tails; a class whose tail does not
/// stabilize falls back to its q-limit and is flagged.
inline ChamberSet superset_halfinf(Kind kind, const ConjugacyRep& b, const Budgets& bud, std::size_t depth = 40)
{
    const RootSystem& rs = root_system(kind);
    detail::prepare_instances(rs, bud);
    auto tasks = detail::class_tasks(rs, bud.p_max);
    struct R {
        std::vector<Alcove> chambers;
        bool fallback = false;
        bool truncated = false;
    };
    auto results = parallel_map<R>(tasks.size(), bud.threads, [&](std::size_t i) {
        const auto& t = tasks[i];
        R r;
        try {
            OmegaTail tail = omega_tail(rs, t.cls, t.p, t.w, b, depth);
            r.chambers = fold_left_infinite(rs, tail.chambers, tail.labels, FoldWindow{bud.radius});
        } catch (const OmegaError&) {
            FoldLimit fl = fold_limit(rs, t.cls, t.p, t.w, b, bud.q_max, bud.stability_window, bud.radius);
            r.chambers = fl.chambers;
            r.fallback = true;
            r.truncated = !fl.stable && fl.last_q >= 0;
        }
        return r;
    });
    AlcoveSet acc;
    bool truncated = false, fallback = false;
    for (const auto& r : results) {
        acc.insert(r.chambers.begin(), r.chambers.end());
        truncated = truncated || r.truncated;
        fallback = fallback || r.fallback;
    }
    ChamberSet out = detail::finish_superset(rs, b, bud, std::move(acc), truncated);
    if (fallback) out.flags.insert("halfinf-fallback");
    return out;
}

inline ChamberSet superset(Kind kind, const ConjugacyRep& b, const Budgets& bud, SupersetMethod m)
{
    switch (m) {
        case SupersetMethod::Classes: return superset_classes(kind, b, bud);
        case SupersetMethod::Complete: return superset_complete(kind, b, bud);
        case SupersetMethod::HalfInfinite: return superset_halfinf(kind, b, bud);
    }
    throw std::invalid_argument("unknown method");
}

}  // namespace adlv
