#include <random>
#include <stdexcept>

#include "doctest.h"
#include "kernelcut/matching.hpp"

using namespace kernelcut;

namespace {

BipartiteGraph random_bipartite(std::mt19937_64& rng, int left, int right, double p) {
    std::bernoulli_distribution coin(p);
    BipartiteGraph h{left, right, {}};
    for (int a = 0; a < left; ++a)
        for (int b = 0; b < right; ++b)
            if (coin(rng)) h.edges.push_back({a, b});
    return h;
}

bool is_matching(const BipartiteGraph& h, const Matching& m) {
    std::vector<char> l(h.left, 0), r(h.right, 0);
    for (auto [a, b] : m.pairs) {
        bool edge = false;
        for (auto e : h.edges) edge = edge || e == std::make_pair(a, b);
        if (!edge || l[a] || r[b]) return false;
        l[a] = r[b] = 1;
    }
    return true;
}

}  // namespace

TEST_CASE("maximum matching examples") {
    CHECK(maximum_matching({3, 3, {}}).size() == 0);
    BipartiteGraph h{2, 3, {{0, 0}, {0, 1}, {1, 1}}};
    Matching m = maximum_matching(h);
    CHECK(m.size() == 2);
    CHECK(is_matching(h, m));
    CHECK(m.matched_left == std::vector<int>{0, 1});
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            BipartiteGraph k{a, b, {}};
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) k.edges.push_back({i, j});
            CHECK(maximum_matching(k).size() == std::min(a, b));
        }
}

TEST_CASE("maximum matching equals brute force and is deterministic") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 300; ++it) {
        const int l = 1 + static_cast<int>(rng() % 7), r = 1 + static_cast<int>(rng() % 7);
        BipartiteGraph h = random_bipartite(rng, l, r, 0.1 + 0.1 * static_cast<double>(rng() % 7));
        Matching m = maximum_matching(h);
        CHECK(is_matching(h, m));
        CHECK(m.size() == brute_force_matching_size(h));
        Matching again = maximum_matching(h);
        CHECK(again.pairs == m.pairs);
    }
}

TEST_CASE("coverable") {
    BipartiteGraph h{2, 2, {{0, 0}, {0, 1}}};
    CHECK(coverable(h, {}));
    CHECK(coverable(h, {0}));
    CHECK_FALSE(coverable(h, {0, 1}));
}

TEST_CASE("coverable agrees with a matching on the demand side") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        const int l = 1 + static_cast<int>(rng() % 6), r = 1 + static_cast<int>(rng() % 6);
        BipartiteGraph h = random_bipartite(rng, l, r, 0.35);
        std::vector<int> demand;
        std::vector<int> remap(r, -1);
        for (int b = 0; b < r; ++b)
            if (rng() % 2) {
                remap[b] = static_cast<int>(demand.size());
                demand.push_back(b);
            }
        BipartiteGraph sub{l, static_cast<int>(demand.size()), {}};
        for (auto [a, b] : h.edges)
            if (remap[b] >= 0) sub.edges.push_back({a, remap[b]});
        CHECK(coverable(h, demand) == (maximum_matching(sub).size() == static_cast<int>(demand.size())));
    }
}

TEST_CASE("matched left vertices can serve every coverable demand") {
    CHECK(matched_restriction_holds({0, 0, {}}));
    CHECK(matched_restriction_holds({4, 4, {}}));
    // one supplier, many demands
    for (int r = 1; r <= 12; ++r) {
        BipartiteGraph h{1, r, {}};
        for (int b = 0; b < r; ++b) h.edges.push_back({0, b});
        CHECK(matched_restriction_holds(h));
    }
    // many suppliers, one demand
    BipartiteGraph fan{10, 1, {}};
    for (int a = 0; a < 10; ++a) fan.edges.push_back({a, 0});
    CHECK(matched_restriction_holds(fan));
    std::mt19937_64 rng(9);
    for (int it = 0; it < 200; ++it) {
        BipartiteGraph h = random_bipartite(rng, 1 + static_cast<int>(rng() % 10), 1 + static_cast<int>(rng() % 10),
                                            0.25);
        CHECK(matched_restriction_holds(h));
    }
}

TEST_CASE("the exhaustive check refuses large right sides") {
    CHECK_THROWS_AS(matched_restriction_holds({1, 17, {}}), std::invalid_argument);
}

TEST_CASE("restricting the left side keeps indices") {
    BipartiteGraph h{3, 2, {{0, 0}, {1, 1}, {2, 0}}};
    BipartiteGraph r = restrict_left(h, {0, 2});
    CHECK(r.left == 3);
    CHECK(r.edges == std::vector<std::pair<int, int>>{{0, 0}, {2, 0}});
}
