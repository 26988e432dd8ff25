#pragma once

#include <functional>
#include <variant>

#include "subset.hpp"
#include "superset.hpp"

namespace adlv {

enum class Verdict { Nonempty, Empty, Unknown };

inline const char* verdict_name(Verdict v, bool truncated = false)
{
    switch (v) {
        case Verdict::Nonempty: return "NONEMPTY";
        case Verdict::Empty: return truncated ? "EMPTY-at-budget" : "EMPTY";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

inline Verdict parse_verdict(const std::string& s)
{
    if (s == "NONEMPTY") return Verdict::Nonempty;
    if (s == "EMPTY" || s == "EMPTY-at-budget") return Verdict::Empty;
    if (s == "UNKNOWN") return Verdict::Unknown;
    throw std::invalid_argument("unknown verdict: " + s);
}

struct VerdictEntry {
    Verdict verdict = Verdict::Unknown;
    std::optional<Provenance> provenance;  ///< set for NONEMPTY

    friend bool operator==(const VerdictEntry&, const VerdictEntry&) = default;
};

/// Verdict for every alcove of the window.
struct VerdictMap {
    Kind group = Kind::A2;
    ConjugacyRep b{};
    WindowInfo window{};
    std::set<std::string> flags;
    std::map<Alcove, VerdictEntry> entries;

    bool exact() const { return count(Verdict::Unknown) == 0; }
    bool truncated() const { return window.truncated; }

    std::size_t count(Verdict v) const
    {
        std::size_t n = 0;
        for (const auto& [_, e] : entries) n += e.verdict == v;
        return n;
    }

    std::vector<Alcove> with(Verdict v) const
    {
        std::vector<Alcove> out;
        for (const auto& [a, e] : entries)
            if (e.verdict == v) out.push_back(a);
        return out;
    }
};

/// Sandwich assembly: NONEMPTY on the subset, EMPTY off the superset, UNKNOWN between.
inline VerdictMap assemble(const ChamberSet& sub, const ChamberSet& sup)
{
    if (sub.group != sup.group) throw std::invalid_argument("subset and superset groups differ");
    const RootSystem& rs = root_system(sup.group);
    VerdictMap out;
    out.group = sup.group;
    out.b = sup.b;
    out.window = sup.window;
    out.flags = sup.flags;
    out.flags.insert(sub.flags.begin(), sub.flags.end());
    for (const Alcove& a : alcoves_within(rs, static_cast<std::size_t>(sup.window.radius))) {
        VerdictEntry e;
        if (sub.contains(a)) {
            if (!sup.contains(a)) throw std::logic_error("certified chamber outside the superset: " + to_string(rs, a));
            e.verdict = Verdict::Nonempty;
            auto it = sub.provenance.find(a);
            if (it != sub.provenance.end()) e.provenance = it->second;
        } else {
            e.verdict = sup.contains(a) ? Verdict::Unknown : Verdict::Empty;
        }
        out.entries.emplace(a, std::move(e));
    }
    if (out.exact()) out.flags.insert("exact");
    return out;
}

inline VerdictMap solve(Kind kind, const ConjugacyRep& b, const Budgets& bud,
                        SupersetMethod method = SupersetMethod::Classes, bool seed_only = false)
{
    if (b.kind != kind) throw std::invalid_argument("b belongs to another group");
    ChamberSet sup = superset(kind, b, bud, method);
    ChamberSet sub = subset(kind, b, bud.radius, seed_only);
    return assemble(sub, sup);
}

// ---------------------------------------------------------------------------
// Rank one closed forms

/// Signed index i of C_M^i: C_M is 0, positive indices to the right.
inline std::int64_t a1_index(const Alcove& a)
{
    const RootSystem& rs = root_system(Kind::A1);
    return floor_div(barycenter(rs, a)[0], rs.vertices[1][0] - rs.vertices[0][0]);
}

inline Alcove a1_chamber(std::int64_t i)
{
    const RootSystem& rs = root_system(Kind::A1);
    const std::int64_t step = rs.vertices[1][0] - rs.vertices[0][0];
    return locate(rs, Vec{i * step + step / 2, 0, 0});
}

/// Membership of C_M^i in the answer for b = diag(pi^s, pi^-s).
inline std::function<bool(std::int64_t)> sl2_solution(std::int64_t s)
{
    if (s < 0) throw std::invalid_argument("s must be >= 0");
    return [s](std::int64_t i) {
        const std::int64_t m = i < 0 ? -i : i;
        return m == 2 * s || (m > 2 * s && m % 2 == 1);
    };
}

/// All s for which C_M^i is in the answer.
inline std::vector<std::int64_t> sl2_inverse(std::int64_t i)
{
    std::vector<std::int64_t> out;
    const std::int64_t m = i < 0 ? -i : i;
    for (std::int64_t s = 0; 2 * s <= m; ++s)
        if (sl2_solution(s)(i)) out.push_back(s);
    return out;
}

/// Window of radius r filled from a chamber-index predicate.
inline VerdictMap a1_closed_form(const ConjugacyRep& b, std::int64_t radius,
                                 const std::function<bool(std::int64_t)>& member, const std::string& detail)
{
    VerdictMap out;
    out.group = Kind::A1;
    out.b = b;
    out.window.radius = radius;
    out.flags = {"closed-form", "exact"};
    for (std::int64_t i = -radius; i <= radius; ++i) {
        VerdictEntry e;
        if (member(i)) {
            e.verdict = Verdict::Nonempty;
            e.provenance = Provenance{"closed-form", std::nullopt, detail};
        } else {
            e.verdict = Verdict::Empty;
        }
        out.entries.emplace(a1_chamber(i), std::move(e));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Extended groups: the second coordinate of inv is v(det).

struct ExtendedVerdict {
    std::string variant;
    VerdictMap base;
    std::int64_t det_component = 0;
    std::int64_t modulus = 0;  ///< 0: integer valued; otherwise residues
};

inline std::int64_t reduce_mod(std::int64_t v, std::int64_t m) { return m == 0 ? v : ((v % m) + m) % m; }

struct Gl2Diagonal {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
};

struct Gl2Antidiagonal {
    std::int64_t alpha = 1;  ///< odd
};

/// GL2 (or PGL2 when `projective`) with b diagonal or antidiagonal.
inline ExtendedVerdict gl2_variants(const std::variant<Gl2Diagonal, Gl2Antidiagonal>& v, std::int64_t radius,
                                   bool projective = false)
{
    ExtendedVerdict out;
    out.modulus = projective ? 2 : 0;
    if (const auto* d = std::get_if<Gl2Diagonal>(&v)) {
        const std::int64_t gap = d->alpha > d->beta ? d->alpha - d->beta : d->beta - d->alpha;
        out.variant = "diagonal";
        auto member = [gap](std::int64_t i) {
            const std::int64_t m = i < 0 ? -i : i;
            return m == gap || (m > gap && (m - gap) % 2 == 1);
        };
        out.base = a1_closed_form(identity_rep(Kind::A1), radius, member,
                                  "diag " + std::to_string(d->alpha) + "," + std::to_string(d->beta));
        if (gap % 2 == 0) out.base.b = make_rep(Kind::A1, {gap / 2});
        out.det_component = reduce_mod(d->alpha + d->beta, out.modulus);
    } else {
        const auto& a = std::get<Gl2Antidiagonal>(v);
        if (a.alpha % 2 == 0) throw std::invalid_argument("antidiagonal b needs odd alpha");
        out.variant = "antidiagonal";
        out.base = a1_closed_form(identity_rep(Kind::A1), radius, [](std::int64_t i) { return i % 2 == 0; },
                                  "antidiag " + std::to_string(a.alpha));
        out.det_component = reduce_mod(a.alpha, out.modulus);
    }
    out.base.flags.insert(out.variant);
    return out;
}

enum class ExtendedGroup { GL3, PGL3, GSp4, PSp4 };

inline const char* extended_name(ExtendedGroup g)
{
    switch (g) {
        case ExtendedGroup::GL3: return "gl3";
        case ExtendedGroup::PGL3: return "pgl3";
        case ExtendedGroup::GSp4: return "gsp4";
        case ExtendedGroup::PSp4: return "psp4";
    }
    return "?";
}

/// Attaches the constant det component to a simply-connected result.  The
/// representatives have v(det b) = 0 (half of it for GSp4).
inline ExtendedVerdict extended_decorate(ExtendedGroup g, const VerdictMap& base)
{
    const bool a2 = g == ExtendedGroup::GL3 || g == ExtendedGroup::PGL3;
    if (base.group != (a2 ? Kind::A2 : Kind::C2)) throw std::invalid_argument("base map has the wrong root system");
    ExtendedVerdict out;
    out.variant = extended_name(g);
    out.base = base;
    out.modulus = g == ExtendedGroup::PGL3 ? 3 : g == ExtendedGroup::PSp4 ? 2 : 0;
    std::int64_t det = 0;
    for (int i = 0; i < root_system(base.group).dim; ++i) det += base.b.lambda[i];
    if (!a2) det = 0;
    out.det_component = reduce_mod(det, out.modulus);
    return out;
}

// ---------------------------------------------------------------------------

struct CompareReport {
    std::vector<Alcove> only_first;
    std::vector<Alcove> only_second;
    std::size_t common = 0;
    bool exact = false;  ///< the two sets coincide
};

inline CompareReport compare(const ChamberSet& a, const ChamberSet& b)
{
    if (a.group != b.group) throw std::invalid_argument("compare: groups differ");
    if (a.b.lambda != b.b.lambda) throw std::invalid_argument("compare: b differs");
    if (a.window.radius != b.window.radius) throw std::invalid_argument("compare: windows differ");
    CompareReport r;
    std::set_difference(a.chambers.begin(), a.chambers.end(), b.chambers.begin(), b.chambers.end(),
                        std::back_inserter(r.only_first));
    std::set_difference(b.chambers.begin(), b.chambers.end(), a.chambers.begin(), a.chambers.end(),
                        std::back_inserter(r.only_second));
    r.common = a.chambers.size() - r.only_first.size();
    r.exact = r.only_first.empty() && r.only_second.empty();
    return r;
}

}  // namespace adlv
