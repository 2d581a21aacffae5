#include <doctest.h>

#include "steiner/generators.hpp"

using namespace steiner;

TEST_CASE("canonical families") {
    CHECK(make_star(5).edge_list() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(make_path(4).edge_list() ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(make_star(1).order() == 1);
    CHECK(make_path(1).order() == 1);

    const Tree sp = make_spider({3, 2, 1});
    CHECK(sp.order() == 7);
    CHECK(sp.degree(0) == 3);
    CHECK(sp.leaves() == VertexSet{3, 5, 6});

    const Tree cat = make_caterpillar(3, {0, 1, 0});
    CHECK(cat.order() == 4);
    CHECK(cat.edge_list() ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
}

TEST_CASE("generate validates params") {
    CHECK_THROWS_AS(generate({TreeKind::Spider, 9, {3, 2, 1}, 0}), Error);
    CHECK_THROWS_AS(generate({TreeKind::Star, 5, {1}, 0}), Error);
    CHECK_THROWS_AS(make_spider({0}), Error);
    CHECK_THROWS_AS(make_caterpillar(2, {1}), Error);
    CHECK(generate({TreeKind::Spider, 7, {3, 2, 1}, 0}) == make_spider({3, 2, 1}));
}

TEST_CASE("pruefer decode") {
    // sequence [0] is the 3-star centered at 0
    CHECK(pruefer_decode({0}).edge_list() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    // constant sequence gives a star at that vertex
    CHECK(pruefer_decode({2, 2, 2}).degree(2) == 4);
}

TEST_CASE("random trees are deterministic per seed") {
    for (int n : {1, 2, 3, 8, 40}) {
        const Tree a = random_pruefer_tree(n, 42);
        const Tree b = random_pruefer_tree(n, 42);
        CHECK(a == b);
        CHECK(a.order() == n);
    }
    CHECK(!(random_pruefer_tree(12, 1) == random_pruefer_tree(12, 2)));
}

TEST_CASE("exhaustive enumeration hits the Cayley counts") {
    for (int n = 1; n <= 6; ++n) {
        long long count = 0;
        for_each_labeled_tree(n, [&](const Tree& t) {
            CHECK(t.order() == n);
            ++count;
        });
        CHECK(count == labeled_tree_count(n));
    }
    CHECK(labeled_tree_count(8) == 262144);
}
