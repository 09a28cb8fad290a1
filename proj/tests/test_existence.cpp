#include <doctest.h>

#include "existence.hpp"
#include "testutil.hpp"

using namespace psell;

TEST_CASE("divisibility graph of the worked example") {
    ProblemInstance inst = make_instance({2, 4, 6}, {1, 1, 1, 2, 2});
    DivisibilityGraph g = build_graph(inst);
    CHECK(g.left == std::vector<int>{3, 4});  // 0-based columns 4 and 5
    CHECK(g.adj[0] == std::vector<int>{0, 1, 2});
    CHECK(g.adj[1] == std::vector<int>{0, 1, 2});

    ProblemInstance none = make_instance({2, 3}, {1, 5});
    DivisibilityGraph g2 = build_graph(none);
    CHECK(g2.left == std::vector<int>{1});
    CHECK(g2.adj[0].empty());

    ProblemInstance same = make_instance({7}, {7});
    DivisibilityGraph g3 = build_graph(same);
    CHECK(g3.left == std::vector<int>{0});
    CHECK(g3.adj[0] == std::vector<int>{0});
}

TEST_CASE("maximum matching agrees with brute force") {
    ProblemInstance inst = make_instance({2, 4, 6}, {1, 1, 1, 2, 2});
    DivisibilityGraph g = build_graph(inst);
    CHECK(max_matching(g).size == 2);
    CHECK(testutil::brute_force_max_matching(g) == 2);

    DivisibilityGraph empty;
    empty.right = 3;
    CHECK(max_matching(empty).size == 0);

    DivisibilityGraph complete;
    complete.right = 3;
    complete.left = {0, 1, 2};
    complete.adj = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    CHECK(max_matching(complete).size == 3);

    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        ProblemInstance randinst = testutil::random_instance(rng, 5, 9);
        DivisibilityGraph rg = build_graph(randinst);
        CHECK(max_matching(rg).size == testutil::brute_force_max_matching(rg));
    }
}

TEST_CASE("worked example decides positively with the documented witness") {
    ProblemInstance inst = make_instance({2, 4, 6}, {1, 1, 1, 2, 2});
    ExistenceResult res = maps_exist(inst);
    REQUIRE(res.exists);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->K == std::set<int>{3, 4});
    CHECK(res.witness->sigma.at(3) == 0);
    CHECK(res.witness->sigma.at(4) == 1);
}

TEST_CASE("infeasible instance yields a verifying certificate") {
    ProblemInstance inst = make_instance({2, 3}, {1, 5});
    ExistenceResult res = maps_exist(inst);
    REQUIRE(!res.exists);
    REQUIRE(res.certificate.has_value());
    CHECK(verify_certificate(inst, *res.certificate));
    // the certificate is falsifiable: drop the deficiency and it fails
    InfeasibilityCertificate bogus = *res.certificate;
    bogus.violating_sources.pop_back();
    CHECK(!verify_certificate(inst, bogus));
}

TEST_CASE("small-source instances are feasible with an empty pattern") {
    ProblemInstance inst = make_instance({7, 3}, {1, 1, 1});
    ExistenceResult res = maps_exist(inst);
    REQUIRE(res.exists);
    CHECK(res.witness->K.empty());
    check_pattern(inst, *res.witness);
}

TEST_CASE("codimension precondition is enforced") {
    ProblemInstance wide = make_instance({2}, {1, 1, 1});
    CHECK_THROWS_AS(maps_exist(wide), Error);
    CHECK_THROWS_AS(enumerate_patterns(wide), Error);
}

TEST_CASE("enumeration covers the worked example's patterns in order") {
    ProblemInstance inst = make_instance({2, 4, 6}, {1, 1, 1, 2, 2});
    auto patterns = enumerate_patterns(inst);
    // n = s = 3, so every divisibility-respecting assignment qualifies:
    // empty, 2 * 3 singletons, 9 pairs.
    CHECK(patterns.size() == 16);
    CHECK(patterns.front().K.empty());

    auto contains = [&](std::set<int> k, std::map<int, int> sigma) {
        AdmissiblePattern pat{std::move(k), std::move(sigma)};
        return std::find(patterns.begin(), patterns.end(), pat) != patterns.end();
    };
    CHECK(contains({3, 4}, {{3, 2}, {4, 2}}));  // sigma(4)=sigma(5)=3, non-injective
    CHECK(contains({3, 4}, {{3, 0}, {4, 1}}));  // sigma(4)=1, sigma(5)=2
    CHECK(contains({3, 4}, {{3, 1}, {4, 2}}));  // sigma'(4)=2, sigma'(5)=3

    // deterministic order: by |K|, then K, then sigma values
    auto repeat = enumerate_patterns(inst);
    CHECK(patterns == repeat);
    for (std::size_t t = 1; t < patterns.size(); ++t) CHECK(patterns[t - 1].K.size() <= patterns[t].K.size());

    // every emitted pattern satisfies its invariants
    for (const auto& pat : patterns) check_pattern(inst, pat);

    CHECK(enumerate_patterns(inst, 5).size() == 5);
    CHECK(enumerate_patterns(make_instance({2, 3}, {1, 5})).empty());
}

TEST_CASE("existence agrees with literal brute force on random instances") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 300; ++t) {
        ProblemInstance inst = testutil::random_instance(rng);
        ExistenceResult res = maps_exist(inst);
        CHECK(res.exists == testutil::brute_force_exists(inst));
        if (res.exists) {
            check_pattern(inst, *res.witness);
            CHECK(!enumerate_patterns(inst, 1).empty());
        } else {
            CHECK(verify_certificate(inst, *res.certificate));
            CHECK(enumerate_patterns(inst, 10).empty());
        }
    }
}

TEST_CASE("equidimensional consistency with permutation search") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 200; ++t) {
        int n = static_cast<int>(testutil::rnd_int(rng, 1, 7));
        std::vector<unsigned> p, q;
        for (int i = 0; i < n; ++i) {
            p.push_back(static_cast<unsigned>(testutil::rnd_int(rng, 1, 10)));
            q.push_back(testutil::rnd_int(rng, 0, 2) == 0 ? 1u
                                                          : static_cast<unsigned>(testutil::rnd_int(rng, 1, 10)));
        }
        ProblemInstance inst = make_instance(p, q);
        CHECK(maps_exist(inst).exists == testutil::brute_force_perm_exists(p, q));
    }
}
