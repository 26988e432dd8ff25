#pragma once

#include <random>
#include <set>

#include "adlv/adlv.hpp"

namespace testing_support {

using namespace adlv;

inline const Kind kAllKinds[] = {Kind::A1, Kind::A2, Kind::C2, Kind::G2};
inline const Kind kRank2[] = {Kind::A2, Kind::C2, Kind::G2};

inline std::vector<int> random_word(std::mt19937_64& rng, const RootSystem& rs, std::size_t len)
{
    std::uniform_int_distribution<int> pick(0, rs.rank);
    std::vector<int> w;
    while (w.size() < len) {
        int c = pick(rng);
        if (!w.empty() && w.back() == c) continue;
        w.push_back(c);
    }
    return w;
}

inline AffineElement random_element(std::mt19937_64& rng, const RootSystem& rs, std::size_t max_len = 12)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    return from_word(rs, random_word(rng, rs, len(rng)));
}

/// Breadth-first distances over the adjacency graph, computed without the length formula.
inline std::map<Alcove, std::int64_t> bfs_distances(const RootSystem& rs, std::int64_t radius)
{
    std::map<Alcove, std::int64_t> dist{{identity_element(), 0}};
    std::vector<Alcove> frontier{identity_element()};
    for (std::int64_t d = 1; d <= radius; ++d) {
        std::vector<Alcove> next;
        for (const Alcove& a : frontier)
            for (int c = 0; c <= rs.rank; ++c) {
                Alcove b = adjacent(rs, a, c);
                if (dist.emplace(b, d).second) next.push_back(b);
            }
        frontier = std::move(next);
    }
    return dist;
}

inline bool is_symmetric(const RootSystem& rs, const std::vector<Alcove>& sorted)
{
    std::set<Alcove> s(sorted.begin(), sorted.end());
    for (const auto& op : symmetry_ops(rs))
        for (const Alcove& a : sorted)
            if (!s.count(symmetry_apply(rs, op, a))) return false;
    return true;
}

}  // namespace testing_support
