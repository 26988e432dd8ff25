#pragma once

#include <map>
#include <sstream>
#include <tuple>

#include "folding.hpp"

namespace adlv {

enum class ClassKind { I1, I2 };

inline const char* class_name(ClassKind c) { return c == ClassKind::I1 ? "I1" : "I2"; }

struct ClassParams {
    ClassKind cls = ClassKind::I1;
    int p = 1;  ///< I1: chambers between the departure edge and the turning edge
    int q = 0;  ///< chambers after the turning edge (I1) or after the departure edge (I2)
    int w = 0;  ///< finite part of the SMG target

    friend auto operator<=>(const ClassParams&, const ClassParams&) = default;
};

inline void validate(const RootSystem& rs, const ClassParams& cp)
{
    if (cp.cls == ClassKind::I1 && (cp.p < 1 || cp.p % 2 == 0)) throw std::invalid_argument("I1 needs odd p >= 1");
    if (cp.cls == ClassKind::I2 && cp.p != 0) throw std::invalid_argument("I2 takes p = 0");
    if (cp.q < 0) throw std::invalid_argument("q must be >= 0");
    if (cp.w < 0 || cp.w >= static_cast<int>(rs.weyl_size())) throw std::invalid_argument("w out of range");
    if (rs.rank == 1 && cp.cls == ClassKind::I1) throw std::invalid_argument("rank 1 has no class I1");
}

/// One type-edge pair realizing a parameter set.
struct ClassInstance {
    Alcove target{};
    std::vector<int> smg_labels;
    std::size_t departure = 0;
};

/// Type-edge pairs of classes I1 and I2, found by scanning SMG targets by
/// length.  Pairs whose composite types coincide for every b (same
/// post-departure labels, same departure cotype, same chamber before the
/// departure up to translation) are stored once.
class InstanceIndex {
public:
    explicit InstanceIndex(const RootSystem& rs) : rs_(&rs) {}

    std::vector<ClassInstance> instances(const ClassParams& cp, std::size_t min_scan)
    {
        std::lock_guard<std::mutex> lock(mu_);
        scan_to(min_scan);
        auto it = table_.find(cp);
        if (it == table_.end()) return {};
        std::vector<ClassInstance> out;
        for (const auto& [_, inst] : it->second) out.push_back(inst);
        return out;
    }

    std::size_t scanned() const { return scanned_; }

private:
    using DedupKey = std::tuple<std::vector<int>, int, int>;

    void scan_to(std::size_t len)
    {
        const RootSystem& rs = *rs_;
        const SectorData& sd = sectors(rs);
        while (scanned_ < len) {
            ++scanned_;
            for (const Alcove& t : layer_table(rs).layer(scanned_)) {
                auto cor = corridor_of(rs, t);
                bool i2 = cor && *cor == sd.i2_corridor;
                bool i1 = !cor && sd.i1_region >= 0 && region_of(rs, t) == sd.i1_region;
                if (!i1 && !i2) continue;
                SmgInfo info = smg_info(rs, t);
                const int n = static_cast<int>(info.gallery.labels.size());
                const Vec& d = sd.corridors[sd.i2_corridor].direction;
                for (int k = 0; k < n; ++k) {
                    ClassParams cp;
                    cp.w = t.finite;
                    if (i2) {
                        cp.cls = ClassKind::I2;
                        cp.p = 0;
                        cp.q = n - k;
                    } else {
                        if (!info.departure_allowed(static_cast<std::size_t>(k))) continue;
                        if (!crossing_parallel(rs, info.chambers[k], info.gallery.labels[k], d)) continue;
                        cp.cls = ClassKind::I1;
                        cp.p = info.turning - 1 - k;
                        cp.q = n - info.turning + 1;
                    }
                    std::vector<int> tail(info.gallery.labels.begin() + k + 1, info.gallery.labels.end());
                    DedupKey key{tail, info.gallery.labels[k], info.chambers[k].finite};
                    table_[cp].emplace(std::move(key),
                                       ClassInstance{t, info.gallery.labels, static_cast<std::size_t>(k)});
                }
            }
        }
    }

    const RootSystem* rs_;
    std::mutex mu_;
    std::size_t scanned_ = 0;
    std::map<ClassParams, std::map<DedupKey, ClassInstance>> table_;
};

inline InstanceIndex& instance_index(const RootSystem& rs)
{
    static InstanceIndex a1(root_system(Kind::A1));
    static InstanceIndex a2(root_system(Kind::A2));
    static InstanceIndex c2(root_system(Kind::C2));
    static InstanceIndex g2(root_system(Kind::G2));
    switch (rs.kind) {
        case Kind::A1: return a1;
        case Kind::A2: return a2;
        case Kind::C2: return c2;
        case Kind::G2: return g2;
    }
    return a1;
}

/// Target lengths to scan so that every instance with these parameters is seen.
inline std::size_t scan_length(const RootSystem& rs, const ClassParams& cp)
{
    return static_cast<std::size_t>(cp.p + cp.q) + 2 * rs.weyl_size() + 4;
}

inline std::vector<GalleryFamily> class_families(const RootSystem& rs, const ClassParams& cp, const ConjugacyRep& b)
{
    validate(rs, cp);
    std::vector<GalleryFamily> out;
    for (const auto& inst : instance_index(rs).instances(cp, scan_length(rs, cp)))
        out.push_back(composite_family(rs, inst.smg_labels, inst.departure, b));
    return out;
}

/// Composite gallery types of a class; empty when no SMG realizes the parameters.
inline std::vector<GalleryType> class_composite(const RootSystem& rs, const ClassParams& cp, const ConjugacyRep& b,
                                                Gamma2Choice choice = Gamma2Choice::All)
{
    std::set<GalleryType> out;
    for (const auto& fam : class_families(rs, cp, b)) {
        if (choice == Gamma2Choice::Canonical) {
            out.insert(fam.canonical());
        } else {
            for (auto& t : fam.expand()) out.insert(std::move(t));
        }
    }
    return {out.begin(), out.end()};
}

/// Folding results of a class with q = 0, 1, ... unioned.
struct FoldLimit {
    std::vector<Alcove> chambers;
    bool stable = false;  ///< stopped after `stability_window` quiet values of q
    int last_q = -1;
};

inline FoldLimit fold_limit(const RootSystem& rs, ClassKind cls, int p, int w, const ConjugacyRep& b, int q_max,
                            int stability_window, std::int64_t radius)
{
    if (stability_window < 1 || q_max < stability_window)
        throw std::invalid_argument("fold_limit needs q_max >= stability_window >= 1");
    FoldWindow win{radius};
    AlcoveSet acc;
    FoldLimit out;
    int quiet = 0;
    for (int q = 0; q <= q_max; ++q) {
        ClassParams cp{cls, p, q, w};
        auto fams = class_families(rs, cp, b);
        if (fams.empty()) continue;
        out.last_q = q;
        std::size_t before = acc.size();
        for (const auto& fam : fams)
            for (const Alcove& a : fold_family(rs, fam, win)) acc.insert(a);
        quiet = (acc.size() == before) ? quiet + 1 : 0;
        if (quiet >= stability_window) {
            out.stable = true;
            break;
        }
    }
    out.chambers = sorted_alcoves(acc);
    return out;
}

/// Terminal segment of a half-infinite class gallery.
struct OmegaTail {
    std::vector<Alcove> chambers;  ///< standard realization, `depth` chambers
    std::vector<int> labels;       ///< depth - 1 labels
    int q = -1;                    ///< parameter at which the tail was confirmed

    GalleryType gallery() const { return GalleryType{chambers.front(), labels}; }
};

struct OmegaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads the last `depth` chambers of the standard realization of the
/// canonical class composite for growing q; returns after three consecutive
/// agreements between successive realizable values of q.
inline OmegaTail omega_tail(const RootSystem& rs, ClassKind cls, int p, int w, const ConjugacyRep& b,
                            std::size_t depth, int q_budget = -1)
{
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (q_budget < 0) q_budget = static_cast<int>(depth) + 40;
    std::optional<OmegaTail> prev;
    int agreements = 0;
    std::ostringstream diag;
    for (int q = 0; q <= q_budget; ++q) {
        ClassParams cp{cls, p, q, w};
        auto fams = class_families(rs, cp, b);
        if (fams.empty()) continue;
        GalleryType t = fams.front().canonical();
        if (t.labels.size() + 1 < depth) continue;
        auto ch = realize(rs, t);
        OmegaTail cur;
        cur.chambers.assign(ch.end() - static_cast<std::ptrdiff_t>(depth), ch.end());
        cur.labels.assign(t.labels.end() - static_cast<std::ptrdiff_t>(depth - 1), t.labels.end());
        cur.q = q;
        if (prev && prev->chambers == cur.chambers && prev->labels == cur.labels) {
            ++agreements;
        } else {
            agreements = 0;
            diag << " q=" << q << ":end=" << to_string(rs, ch.back());
        }
        if (agreements >= 3) return cur;
        prev = cur;
    }
    throw OmegaError(std::string("omega tail did not stabilize for ") + class_name(cls) + " p=" + std::to_string(p) +
                     " w=" + std::to_string(w) + " depth=" + std::to_string(depth) + ";" + diag.str());
}

}  // namespace adlv
