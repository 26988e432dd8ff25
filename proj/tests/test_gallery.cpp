#include <doctest.h>

#include <functional>

#include "support.hpp"

using namespace adlv;
using namespace testing_support;

namespace {

const ConjugacyRep& b_nondegenerate()
{
    static const ConjugacyRep b = make_rep(Kind::A2, {3, -1, -2});
    return b;
}

std::size_t count_paths(const RootSystem& rs, const Alcove& a, const Alcove& b, std::size_t len)
{
    std::size_t n = 0;
    std::function<void(const Alcove&, int, std::size_t)> rec = [&](const Alcove& cur, int last, std::size_t left) {
        if (left == 0) {
            n += cur == b;
            return;
        }
        for (int c = 0; c <= rs.rank; ++c)
            if (c != last) rec(adjacent(rs, cur, c), c, left - 1);
    };
    rec(a, -1, len);
    return n;
}

}  // namespace

TEST_CASE("standard minimal galleries are minimal")
{
    for (Kind k : kRank2) {
        const RootSystem& rs = root_system(k);
        CHECK(smg(rs, identity_element()).labels.empty());
        const std::size_t radius = k == Kind::G2 ? 6 : 7;
        for (const Alcove& t : alcoves_within(rs, radius)) {
            SmgInfo info = smg_info(rs, t);
            CHECK(static_cast<std::int64_t>(info.gallery.labels.size()) == length(rs, t));
            CHECK(fold_standard(rs, info.gallery) == t);
            CHECK(info.chambers == realize(rs, info.gallery));
        }
    }
}

TEST_CASE("corridor targets follow the reduced word")
{
    for (Kind k : {Kind::A2, Kind::C2}) {
        const RootSystem& rs = root_system(k);
        for (const Alcove& t : alcoves_within(rs, 7)) {
            if (!corridor_of(rs, t)) continue;
            CHECK(smg(rs, t).labels == reduced_word(rs, t));
        }
    }
}

TEST_CASE("standard minimal galleries turn at most once")
{
    // Before the turn every crossing wall is transverse to the primary
    // direction; after it, transverse to the secondary one.
    for (Kind k : {Kind::A2, Kind::C2}) {
        const RootSystem& rs = root_system(k);
        const SectorData& sd = sectors(rs);
        for (const Alcove& t : alcoves_within(rs, 7)) {
            SmgInfo info = smg_info(rs, t);
            if (info.corridor || t == identity_element()) continue;
            const Vec& secondary = sd.corridors[info.secondary].direction;
            const auto& labels = info.gallery.labels;
            for (std::size_t i = static_cast<std::size_t>(info.turning - 1); i < labels.size(); ++i) {
                Wall w = facet_wall(rs, info.chambers[i], labels[i]);
                CHECK(dot(secondary, rs.roots[w.root]) != 0);
            }
        }
    }
}

TEST_CASE("minimal galleries")
{
    const RootSystem& rs = root_system(Kind::A2);
    std::mt19937_64 rng(21);
    Alcove d = random_element(rng, rs);
    auto same = minimal_galleries(rs, d, d);
    REQUIRE(same.galleries.size() == 1);
    CHECK(same.galleries[0].labels.empty());
    auto one = minimal_galleries(rs, d, adjacent(rs, d, 2));
    REQUIRE(one.galleries.size() == 1);
    CHECK(one.galleries[0].labels == std::vector<int>{2});
    int checked = 0;
    while (checked < 5) {
        Alcove a = random_element(rng, rs), b = random_element(rng, rs);
        if (distance(rs, a, b) != 5) continue;
        ++checked;
        auto mg = minimal_galleries(rs, a, b);
        CHECK(mg.galleries.size() == count_paths(rs, a, b, 5));
        std::set<Alcove> para(mg.parallelogram.begin(), mg.parallelogram.end());
        for (const auto& g : mg.galleries) {
            CHECK(g.labels.size() == 5);
            CHECK(fold_standard(rs, g) == b);
            for (const Alcove& x : realize(rs, g)) CHECK(para.count(x) == 1);
        }
    }
}

TEST_CASE("composite for b = 1 mirrors across the departure wall")
{
    const RootSystem& rs = root_system(Kind::A2);
    const ConjugacyRep one = identity_rep(Kind::A2);
    int checked = 0;
    for (const Alcove& t : alcoves_within(rs, 6)) {
        SmgInfo info = smg_info(rs, t);
        for (std::size_t k = 0; k < info.gallery.labels.size(); ++k) {
            if (!info.departure_allowed(k)) continue;
            auto types = composite(rs, info, make_departure(rs, info, k), one, Gamma2Choice::All);
            REQUIRE(types.size() == 1);
            const std::size_t post = info.gallery.labels.size() - k;  // chambers after the departure edge
            CHECK(types[0].chamber_count() == 2 * post);
            auto ch = realize(rs, types[0]);
            std::vector<Wall> walls;
            for (std::size_t i = 0; i < types[0].labels.size(); ++i)
                walls.push_back(facet_wall(rs, ch[i], types[0].labels[i]));
            AffineElement mirror = wall_reflection(rs, walls[walls.size() / 2]);
            for (std::size_t i = 0; i < walls.size(); ++i) {
                // Reflect the wall through two of its points: the crossing facets' barycenters.
                const Wall& a = walls[i];
                const Wall& b = walls[walls.size() - 1 - i];
                AffineElement r = compose(rs, compose(rs, mirror, wall_reflection(rs, a)), invert(rs, mirror));
                CHECK(r == wall_reflection(rs, b));
            }
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("composite for nondegenerate b has a minimal middle")
{
    const RootSystem& rs = root_system(Kind::A2);
    const auto& b = b_nondegenerate();
    const Alcove t = *std::find_if(layer_table(rs).layer(7).begin(), layer_table(rs).layer(7).end(),
                                   [&](const Alcove& a) { return !smg_info(rs, a).corridor; });
    SmgInfo info = smg_info(rs, t);
    const std::size_t k = 0;
    REQUIRE(info.departure_allowed(k));
    GalleryFamily fam = composite_family(rs, info.gallery.labels, k, b);
    REQUIRE(fam.middle);
    const std::size_t tail = info.gallery.labels.size() - k - 1;
    for (const auto& g : composite(rs, info, make_departure(rs, info, k), b, Gamma2Choice::All)) {
        CHECK(g.labels.size() == 2 * tail + 2 + fam.middle->steps());
        auto ch = realize(rs, g);
        const Alcove& m0 = ch[tail + 1];
        const Alcove& m1 = ch[tail + 1 + fam.middle->steps()];
        CHECK(distance(rs, m0, m1) == static_cast<std::int64_t>(fam.middle->steps()));
    }
    CHECK(composite(rs, info, make_departure(rs, info, k), b, Gamma2Choice::Canonical).size() == 1);
    CHECK_THROWS_AS(composite(rs, info, make_departure(rs, info, info.gallery.labels.size() - 1), b, Gamma2Choice::All),
                    std::invalid_argument);
}

TEST_CASE("class I1 with p = 7, q = 11, w = f")
{
    const RootSystem& rs = root_system(Kind::A2);
    ClassParams cp{ClassKind::I1, 7, 11, weyl_index_by_name(rs, "f")};
    auto insts = instance_index(rs).instances(cp, scan_length(rs, cp));
    REQUIRE(!insts.empty());
    for (const auto& inst : insts) {
        SmgInfo info = smg_info(rs, inst.target);
        CHECK(inst.target.finite == cp.w);
        CHECK(region_of(rs, inst.target) == sectors(rs).i1_region);
        // p chambers up to the turning edge, q after it, one turn.
        CHECK(info.turning - 1 - static_cast<int>(inst.departure) == 7);
        CHECK(static_cast<int>(info.gallery.labels.size()) - info.turning + 1 == 11);
        GalleryFamily fam = composite_family(rs, inst.smg_labels, inst.departure, b_nondegenerate());
        CHECK(fam.prefix.size() == 18);
        CHECK(fam.suffix.size() == 18);
    }
}

TEST_CASE("class composites")
{
    const RootSystem& rs = root_system(Kind::A2);
    const auto& b = b_nondegenerate();
    // I2 composites are reduced exactly when the departure wall is an a1 + a2 wall or the
    // tail is empty; across an a1 wall the translated tail meets an a2 wall of the middle again.
    const int a12 = 2;
    for (int q = 1; q <= 10; ++q)
        for (int w = 0; w < 6; ++w) {
            ClassParams cp{ClassKind::I2, 0, q, w};
            auto insts = instance_index(rs).instances(cp, scan_length(rs, cp));
            REQUIRE(insts.size() == 1);
            SmgInfo info = smg_info(rs, insts[0].target);
            const std::size_t k = insts[0].departure;
            const bool across_a12 = facet_wall(rs, info.chambers[k], info.gallery.labels[k]).root == a12;
            for (const auto& t : class_composite(rs, cp, b)) {
                const bool reduced = static_cast<std::int64_t>(t.labels.size()) == length(rs, fold_standard(rs, t));
                CHECK(reduced == (across_a12 || q == 1));
                if (reduced) CHECK(fold_all(rs, t).size() == 1);
            }
        }
    CHECK(class_composite(rs, ClassParams{ClassKind::I2, 0, 0, 0}, b).empty());

    // b = 1: the smallest I1 instance and its mirror across the departure wall.
    CHECK(class_composite(rs, ClassParams{ClassKind::I1, 1, 0, 0}, identity_rep(Kind::A2)).empty());
    auto mirror = class_composite(rs, ClassParams{ClassKind::I1, 1, 2, 0}, identity_rep(Kind::A2));
    REQUIRE(!mirror.empty());
    for (const auto& t : mirror) {
        REQUIRE(t.labels.size() == 5);
        auto ch = realize(rs, t);
        std::map<Wall, int> walls;
        for (std::size_t i = 0; i < 5; ++i) {
            CHECK(t.labels[i] == t.labels[4 - i]);
            ++walls[facet_wall(rs, ch[i], t.labels[i])];
        }
        CHECK(walls.size() == 3);
        CHECK(walls.at(facet_wall(rs, ch[2], t.labels[2])) == 1);
    }

    ClassParams cp{ClassKind::I1, 3, 5, weyl_index_by_name(rs, "f")};
    std::set<GalleryType> direct;
    for (const auto& inst : instance_index(rs).instances(cp, scan_length(rs, cp))) {
        SmgInfo info = smg_info(rs, inst.target);
        for (auto& t : composite(rs, info, make_departure(rs, info, inst.departure), b, Gamma2Choice::All))
            direct.insert(t);
    }
    auto via = class_composite(rs, cp, b);
    CHECK(!via.empty());
    CHECK(std::vector<GalleryType>(direct.begin(), direct.end()) == via);
    CHECK_THROWS(class_composite(rs, ClassParams{ClassKind::I1, 2, 0, 0}, b));
}

TEST_CASE("omega tails")
{
    const RootSystem& rs = root_system(Kind::A2);
    const auto& b = b_nondegenerate();
    OmegaTail t1 = omega_tail(rs, ClassKind::I1, 7, 0, b, 1);
    REQUIRE(t1.chambers.size() == 1);
    auto fams = class_families(rs, ClassParams{ClassKind::I1, 7, t1.q, 0}, b);
    REQUIRE(!fams.empty());
    CHECK(fold_standard(rs, fams.front().canonical()) == t1.chambers[0]);

    OmegaTail t10 = omega_tail(rs, ClassKind::I1, 7, 0, b, 10);
    OmegaTail t11 = omega_tail(rs, ClassKind::I1, 7, 0, b, 11);
    CHECK(std::equal(t10.labels.begin(), t10.labels.end(), t11.labels.end() - 9));

    OmegaTail t30 = omega_tail(rs, ClassKind::I1, 7, 0, b, 30);
    auto omega = fold_left_infinite(rs, t30.chambers, t30.labels, FoldWindow{12});
    std::set<Alcove> om(omega.begin(), omega.end());
    for (int q : {2, 4, 6})
        for (const auto& t : class_composite(rs, ClassParams{ClassKind::I1, 7, q, 0}, b))
            for (const Alcove& a : fold_all(rs, t, FoldWindow{12})) CHECK(om.count(a) == 1);
    CHECK_THROWS_AS(omega_tail(rs, ClassKind::I1, 7, 0, b, 30, 2), OmegaError);
}
