#include <doctest.h>

#include "support.hpp"

using namespace adlv;
using namespace testing_support;

TEST_CASE("standard folding")
{
    std::mt19937_64 rng(31);
    for (Kind k : kAllKinds) {
        const RootSystem& rs = root_system(k);
        Alcove s = random_element(rng, rs);
        CHECK(fold_standard(rs, GalleryType{s, {}}) == s);
        for (int i = 0; i < 100; ++i) {
            AffineElement g = random_element(rng, rs);
            CHECK(fold_standard(rs, GalleryType{identity_element(), reduced_word(rs, g)}) == g);
            auto w = random_word(rng, rs, 12);
            Alcove start = random_element(rng, rs);
            CHECK(fold_standard(rs, GalleryType{start, w}) == compose(rs, start, from_word(rs, w)));
        }
    }
}

TEST_CASE("small folding examples")
{
    for (Kind k : kAllKinds) {
        const RootSystem& rs = root_system(k);
        for (int c = 0; c <= rs.rank; ++c) {
            GalleryType t{identity_element(), {c, c}};
            std::vector<Alcove> expect{identity_element(), simple_reflection(rs, c)};
            std::sort(expect.begin(), expect.end());
            CHECK(fold_all(rs, t) == expect);
            CHECK(fold_naive(rs, t) == expect);
            CHECK(fold_naive(rs, GalleryType{identity_element(), {c}}) ==
                  std::vector<Alcove>{simple_reflection(rs, c)});
        }
        CHECK(fold_naive(rs, GalleryType{identity_element(), {}}) == std::vector<Alcove>{identity_element()});
        CHECK_THROWS_AS(fold_naive(rs, GalleryType{identity_element(), std::vector<int>(17, 0)}), std::length_error);
    }
}

TEST_CASE("minimal types fold to a single chamber")
{
    std::mt19937_64 rng(32);
    for (Kind k : kAllKinds) {
        const RootSystem& rs = root_system(k);
        for (int i = 0; i < 200; ++i) {
            AffineElement g = random_element(rng, rs, 14);
            GalleryType t{identity_element(), reduced_word(rs, g)};
            CHECK(fold_all(rs, t) == std::vector<Alcove>{g});
            CHECK(choice_point_count(rs, t) == 0);
        }
    }
}

TEST_CASE("fold_all agrees with the naive oracle")
{
    std::mt19937_64 rng(33);
    for (Kind k : kAllKinds) {
        const RootSystem& rs = root_system(k);
        for (int i = 0; i < 200; ++i) {
            std::uniform_int_distribution<std::size_t> len(0, 12);
            Alcove start = random_element(rng, rs, 6);
            GalleryType t{start, random_word(rng, rs, len(rng))};
            auto all = fold_all(rs, t);
            CHECK(all == fold_naive(rs, t));
            CHECK(std::binary_search(all.begin(), all.end(), fold_standard(rs, t)));
            for (const Alcove& a : all)
                CHECK(length(rs, a) <= static_cast<std::int64_t>(t.labels.size()) + length(rs, start));
        }
    }
}

TEST_CASE("windowed folding keeps exactly the in-window results")
{
    std::mt19937_64 rng(34);
    const RootSystem& rs = root_system(Kind::A2);
    for (int i = 0; i < 100; ++i) {
        GalleryType t{identity_element(), random_word(rng, rs, 14)};
        auto full = fold_all(rs, t);
        std::vector<Alcove> inside;
        for (const Alcove& a : full)
            if (length(rs, a) <= 4) inside.push_back(a);
        CHECK(fold_all(rs, t, FoldWindow{4}) == inside);
    }
}

TEST_CASE("families fold like their expansions")
{
    const RootSystem& rs = root_system(Kind::A2);
    const ConjugacyRep b = make_rep(Kind::A2, {3, -1, -2});
    for (int w = 0; w < 6; ++w)
        for (const auto& fam : class_families(rs, ClassParams{ClassKind::I1, 3, 3, w}, b)) {
            std::set<Alcove> expect;
            for (const auto& t : fam.expand())
                for (const Alcove& a : fold_all(rs, t)) expect.insert(a);
            CHECK(fold_family(rs, fam) == std::vector<Alcove>(expect.begin(), expect.end()));
        }
}

TEST_CASE("class I1 p = 7, q = 11, w = f against the naive oracle")
{
    const RootSystem& rs = root_system(Kind::A2);
    const ConjugacyRep b = make_rep(Kind::A2, {3, -1, -2});
    auto types = class_composite(rs, ClassParams{ClassKind::I1, 7, 11, weyl_index_by_name(rs, "f")}, b,
                                 Gamma2Choice::Canonical);
    REQUIRE(!types.empty());
    for (const auto& t : types) CHECK(fold_all(rs, t) == fold_naive(rs, t, 64));
}

TEST_CASE("fold_limit")
{
    const RootSystem& rs = root_system(Kind::A2);
    const ConjugacyRep b = make_rep(Kind::A2, {3, -1, -2});
    FoldLimit small = fold_limit(rs, ClassKind::I1, 3, 0, b, 6, 4, 12);
    FoldLimit large = fold_limit(rs, ClassKind::I1, 3, 0, b, 25, 4, 12);
    CHECK(std::includes(large.chambers.begin(), large.chambers.end(), small.chambers.begin(), small.chambers.end()));
    int first_q = -1;
    for (int q = 0; q <= 25 && first_q < 0; ++q)
        if (!class_families(rs, ClassParams{ClassKind::I1, 3, q, 0}, b).empty()) first_q = q;
    REQUIRE(first_q >= 0);
    for (const auto& t : class_composite(rs, ClassParams{ClassKind::I1, 3, first_q, 0}, b))
        for (const Alcove& a : fold_all(rs, t, FoldWindow{12}))
            CHECK(std::binary_search(large.chambers.begin(), large.chambers.end(), a));
    CHECK_THROWS(fold_limit(rs, ClassKind::I1, 3, 0, b, 2, 4, 12));
}

TEST_CASE("folding is deterministic across threads")
{
    std::mt19937_64 rng(35);
    const RootSystem& rs = root_system(Kind::C2);
    std::vector<GalleryType> types;
    for (int i = 0; i < 64; ++i) types.push_back(GalleryType{identity_element(), random_word(rng, rs, 14)});
    auto run = [&](unsigned threads) {
        return parallel_map<std::vector<Alcove>>(types.size(), threads,
                                                 [&](std::size_t i) { return fold_all(rs, types[i]); });
    };
    auto one = run(1);
    CHECK(run(4) == one);
    CHECK(run(8) == one);
}
