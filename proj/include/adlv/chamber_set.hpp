#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "conjugacy.hpp"

namespace adlv {

enum class SetKind { Superset, Subset, Exact };

inline const char* set_kind_name(SetKind k)
{
    switch (k) {
        case SetKind::Superset: return "superset";
        case SetKind::Subset: return "subset";
        case SetKind::Exact: return "exact";
    }
    return "?";
}

/// Search budgets shared by the pipelines.
struct Budgets {
    std::int64_t radius = 8;
    int p_max = 9;
    int q_max = 40;
    int dep_budget = 16;
    int stability_window = 4;
    unsigned threads = 1;
};

struct WindowInfo {
    std::int64_t radius = 8;
    int p_max = 0;
    int q_max = 0;
    int dep_budget = 0;
    int stability_window = 0;
    bool truncated = false;  ///< some q-limit stopped at q_max instead of stabilizing
};

/// How a chamber entered a set: a rule name, the chamber it came from, and
/// the generator or symmetry involved.
struct Provenance {
    std::string rule;
    std::optional<Alcove> parent;
    std::string detail;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ChamberSet {
    Kind group = Kind::A2;
    ConjugacyRep b{};
    SetKind kind = SetKind::Superset;
    WindowInfo window{};
    std::set<std::string> flags;
    std::vector<Alcove> chambers;  ///< sorted, unique
    std::map<Alcove, Provenance> provenance;

    bool contains(const Alcove& a) const { return std::binary_search(chambers.begin(), chambers.end(), a); }
    std::size_t size() const { return chambers.size(); }
};

template <class Range>
std::vector<Alcove> canonical_within(const RootSystem& rs, const Range& in, std::int64_t radius)
{
    std::vector<Alcove> v;
    for (const Alcove& a : in)
        if (length(rs, a) <= radius) v.push_back(a);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace adlv
