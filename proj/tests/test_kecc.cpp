#include <doctest.h>

#include <random>

#include "steiner/generators.hpp"
#include "steiner/kecc.hpp"
#include "steiner/oracle.hpp"

using namespace steiner;

namespace {

Tree spider321() { return make_spider({3, 2, 1}); }

} // namespace

TEST_CASE("longest_path_from") {
    const Tree p = make_path(4);
    ShrinkableTree wp(p, 0);
    CHECK(longest_path_from(wp, 0) == Path{0, 1, 2, 3});

    const Tree s = make_star(5);
    ShrinkableTree ws(s, 0);
    CHECK(longest_path_from(ws, 0) == Path{0, 1}); // smallest-id tie-break

    // spider(3,2,1): the length-3 leg wins from the center
    const Tree sp = spider321();
    ShrinkableTree wsp(sp, 0);
    CHECK(longest_path_from(wsp, 0) == Path{0, 1, 2, 3});
}

TEST_CASE("shrink_path merges the path into the root") {
    // contract a whole path to a single vertex
    const Tree p = make_path(4);
    ShrinkableTree w(p, 0);
    shrink_path(w, 0, {0, 1, 2, 3});
    CHECK(w.live_count() == 1);
    CHECK(w.live_edges().empty());

    // spider(3,2,1) minus its long leg is a P_4 centered at the hub
    const Tree sp = spider321();
    ShrinkableTree wsp(sp, 0);
    shrink_path(wsp, 0, {0, 1, 2, 3});
    CHECK(wsp.live_count() == 4);
    CHECK(wsp.live_edges() ==
          std::vector<std::pair<int, int>>{{0, 4}, {0, 6}, {4, 5}});

    // pendant hanging off a merged spine vertex reattaches to the root
    const Tree cat = make_caterpillar(3, {0, 1, 0}); // spine 0-1-2, pendant 3 on 1
    ShrinkableTree wc(cat, 0);
    shrink_path(wc, 0, {0, 1, 2});
    CHECK(wc.live_count() == 2);
    CHECK(wc.live_edges() == std::vector<std::pair<int, int>>{{0, 3}});
}

TEST_CASE("shrink_path rejects bad paths") {
    const Tree p = make_path(4);
    ShrinkableTree w(p, 0);
    CHECK_THROWS_AS(shrink_path(w, 0, {0, 2}), Error); // not adjacent
    CHECK_THROWS_AS(shrink_path(w, 0, {1, 2}), Error); // does not start at root
    shrink_path(w, 0, {0, 1});
    CHECK_THROWS_AS(shrink_path(w, 0, {0, 1}), Error); // 1 already merged
}

TEST_CASE("steiner_k_ecc pinned values") {
    // P_6 has two leaves, so k=3 takes the whole-tree shortcut
    const auto shortcut = steiner_k_ecc(make_path(6), 2, 3);
    CHECK(shortcut.ecc == 5);
    CHECK(shortcut.shortcut_used);
    CHECK(shortcut.segment_lengths.empty());

    const auto star = steiner_k_ecc(make_star(5), 0, 3);
    CHECK(star.ecc == 2);
    CHECK(!star.shortcut_used);
    CHECK(star.segment_lengths == std::vector<int>{1, 1});

    const auto spider = steiner_k_ecc(spider321(), 0, 3);
    CHECK(spider.ecc == 5);
    CHECK(spider.segment_lengths == std::vector<int>{3, 2});

    CHECK(steiner_k_ecc(make_path(1), 0, 1).ecc == 0);
    CHECK_THROWS_AS(steiner_k_ecc(make_path(4), 0, 0), Error);
    CHECK_THROWS_AS(steiner_k_ecc(make_path(4), 0, 5), Error);
}

TEST_CASE("greedy value equals brute force, exhaustive small orders") {
    for (int n = 1; n <= 6; ++n)
        for_each_labeled_tree(n, [&](const Tree& t) {
            for (int v = 0; v < n; ++v)
                for (int k = 1; k <= n; ++k)
                    CHECK(steiner_k_ecc(t, v, k).ecc ==
                          ecc_k_bruteforce(t, v, k).value);
        });
}

TEST_CASE("greedy value equals brute force, random larger trees") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 7 + static_cast<int>(rng() % 6);
        const Tree t = random_pruefer_tree(n, rng());
        for (int v = 0; v < n; ++v)
            for (int k = 1; k <= n; ++k)
                CHECK(steiner_k_ecc(t, v, k).ecc == ecc_k_bruteforce(t, v, k).value);
    }
}

TEST_CASE("report invariants") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 14);
        const Tree t = random_pruefer_tree(n, rng());
        const Tree frozen = t; // working-copy discipline: input must not change
        const int leaf_count = static_cast<int>(t.leaves().size());
        for (int k = 1; k <= n; ++k) {
            const int v = static_cast<int>(rng() % n);
            const auto r = steiner_k_ecc(t, v, k);
            CHECK(r.ecc <= n - 1);
            if (k > leaf_count)
                CHECK(r.ecc == n - 1);
            if (!r.shortcut_used) {
                long long sum = 0;
                for (size_t i = 0; i < r.segment_lengths.size(); ++i) {
                    sum += r.segment_lengths[i];
                    if (i)
                        CHECK(r.segment_lengths[i] <= r.segment_lengths[i - 1]);
                }
                CHECK(sum == r.ecc);
            }
        }
        CHECK(t == frozen);
    }
}

TEST_CASE("k=2 equals BFS eccentricity") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 60);
        const Tree t = random_pruefer_tree(n, rng());
        for (int v = 0; v < n; ++v)
            CHECK(steiner_k_ecc(t, v, 2).ecc == bfs_eccentricity(t, v));
    }
}

TEST_CASE("avg_steiner_k_ecc pinned values") {
    CHECK(avg_steiner_k_ecc(make_star(5), 3) == make_rational(14, 5));
    CHECK(avg_steiner_k_ecc(make_path(6), 3) == make_rational(5, 1));
    // P_5, k=2: eccentricities 4,3,2,3,4
    CHECK(avg_steiner_k_ecc(make_path(5), 2) == make_rational(16, 5));
}
