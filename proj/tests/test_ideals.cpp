#include <doctest.h>

#include "ideals.hpp"
#include "testutil.hpp"

using namespace psell;

TEST_CASE("essential type by staircase counting") {
    CHECK(essential_type(normalize_signature({1, 1, 1})) == 1);
    CHECK(essential_type(normalize_signature({2, 4, 6})) == 48);
    CHECK(essential_type(normalize_signature({7})) == 7);

    // staircase count equals the product of the exponents
    std::mt19937_64 rng(71);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(testutil::rnd_int(rng, 1, 6));
        std::vector<unsigned> p;
        mpz_class product = 1;
        for (int i = 0; i < n; ++i) {
            p.push_back(static_cast<unsigned>(testutil::rnd_int(rng, 1, 10)));
            product *= p.back();
        }
        CHECK(essential_type(normalize_signature(p)) == product);
    }
}

TEST_CASE("monomial ideal codimension") {
    // (z1, z2) in two variables
    CHECK(monomial_codim(make_monomial_ideal(2, {{1, 0}, {0, 1}})).value == 1);
    // ideal of the worked-example map: (z3^6, z1, z2^2)
    CodimResult r = monomial_codim(make_monomial_ideal(3, {{0, 0, 6}, {1, 0, 0}, {0, 2, 0}}));
    CHECK(r.finite);
    CHECK(r.value == 12);
    // no pure power of the second variable
    CHECK(!monomial_codim(make_monomial_ideal(2, {{2, 0}})).finite);
    // redundant generators are removed
    MonomialIdeal ideal = make_monomial_ideal(2, {{1, 0}, {2, 0}, {1, 1}});
    CHECK(ideal.gens.size() == 1);
}

TEST_CASE("monomial codimension agrees with brute-force staircase enumeration") {
    std::mt19937_64 rng(72);
    for (int t = 0; t < 40; ++t) {
        int n = static_cast<int>(testutil::rnd_int(rng, 1, 3));
        std::vector<std::vector<unsigned>> gens;
        // pure powers guarantee finiteness, then extras
        for (int i = 0; i < n; ++i) {
            std::vector<unsigned> g(n, 0);
            g[i] = static_cast<unsigned>(testutil::rnd_int(rng, 1, 5));
            gens.push_back(g);
        }
        int extras = static_cast<int>(testutil::rnd_int(rng, 0, 3));
        for (int e = 0; e < extras; ++e) {
            std::vector<unsigned> g(n, 0);
            for (int i = 0; i < n; ++i) g[i] = static_cast<unsigned>(testutil::rnd_int(rng, 0, 4));
            gens.push_back(g);
        }
        MonomialIdeal ideal = make_monomial_ideal(n, gens);
        CodimResult fast = monomial_codim(ideal);
        REQUIRE(fast.finite);

        // brute force: walk all candidate monomials up to the generator box
        std::vector<unsigned> bounds(n, 0);
        for (int i = 0; i < n; ++i)
            for (const auto& g : gens) {
                bool pure = g[i] > 0;
                for (int j = 0; j < n && pure; ++j) pure = j == i || g[j] == 0;
                if (pure && (bounds[i] == 0 || g[i] < bounds[i])) bounds[i] = g[i];
            }
        long count = 0;
        std::vector<unsigned> mono(n, 0);
        auto rec = [&](auto&& self, int var) -> void {
            if (var == n) {
                for (const auto& g : ideal.gens) {
                    bool div = true;
                    for (int i = 0; i < n; ++i) div = div && g[i] <= mono[i];
                    if (div) return;
                }
                ++count;
                return;
            }
            for (unsigned e = 0; e < bounds[var]; ++e) {
                mono[var] = e;
                self(self, var + 1);
            }
            mono[var] = 0;
        };
        rec(rec, 0);
        CHECK(fast.value == count);
    }
}

TEST_CASE("multiplicity of the worked-example map is 12, certified") {
    ProblemInstance inst = make_instance({2, 4, 6}, {1, 1, 1, 2, 2});
    Matrix w(3, std::vector<GRat>(5, GRat(0)));
    w[0][3] = GRat(1);
    w[1][4] = GRat(1);
    w[2][0] = GRat(1);
    ClassifiedMap h = ClassifiedMap::monomial(inst, AdmissiblePattern{{3, 4}, {{3, 0}, {4, 1}}}, w);
    MultiplicityResult mr = map_multiplicity(h);
    CHECK(mr.finite);
    CHECK(mr.value == 12);
    CHECK(mr.certified);
    CHECK(check_mult_bound(h));
    CHECK(essential_type(inst.source) == 48);
}

TEST_CASE("equidimensional base maps have multiplicity prod(p_i/q_i)") {
    ProblemInstance inst = make_instance({4, 6}, {2, 3});
    ClassifiedMap h =
        ClassifiedMap::monomial(inst, AdmissiblePattern{{0, 1}, {{0, 0}, {1, 1}}}, identity_matrix(2));
    MultiplicityResult mr = map_multiplicity(h);
    CHECK(mr.value == 4);  // (4/2) * (6/3)
    CHECK(mr.certified);
    CHECK(check_mult_bound(h));
}

TEST_CASE("maps with empty pattern achieve the essential type exactly") {
    ProblemInstance inst = make_instance({3, 5}, {1, 1, 1});
    ClassifiedMap h = ClassifiedMap::default_witness(inst, AdmissiblePattern{});
    MultiplicityResult mr = map_multiplicity(h);
    CHECK(mr.certified);
    CHECK(mr.value == essential_type(inst.source));
    CHECK(check_mult_bound(h));
}

TEST_CASE("mixed linear-block generators go through the truncated quotient") {
    // A unitary mix of the linear block keeps the multiplicity of the
    // underlying monomial map.
    std::mt19937_64 rng(73);
    ProblemInstance inst = make_instance({2, 3}, {1, 1, 2});
    auto patterns = enumerate_patterns(inst);
    REQUIRE(!patterns.empty());
    for (const auto& pat : patterns) {
        if (pat.K.empty()) continue;
        ClassifiedMap base = ClassifiedMap::default_witness(inst, pat);
        MultiplicityResult base_mult = map_multiplicity(base);
        REQUIRE(base_mult.certified);

        std::vector<GRat> mu{testutil::random_unimodular(rng)};
        ClassifiedMap mixed = base.with_linear_phase(testutil::random_unitary(rng, 2), mu);
        MultiplicityResult mixed_mult = map_multiplicity(mixed);
        CHECK(mixed_mult.certified);
        CHECK(mixed_mult.value == base_mult.value);
        CHECK(check_mult_bound(mixed));
    }
}

TEST_CASE("multiplicity bound holds across the random corpus") {
    std::mt19937_64 rng(74);
    int tested = 0;
    while (tested < 25) {
        ProblemInstance inst = testutil::random_instance(rng, 4, 6);
        if (!maps_exist(inst).exists) continue;
        ClassifiedMap h = testutil::random_map(rng, inst);
        MultiplicityResult mr = map_multiplicity(h);
        CHECK(mr.finite);
        if (mr.certified) {
            CHECK(mr.value <= essential_type(inst.source));
            CHECK(mr.value >= 1);
        }
        CHECK(mr.certified);  // the classified family always certifies
        ++tested;
    }
}
