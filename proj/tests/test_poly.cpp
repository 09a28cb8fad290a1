#include <doctest.h>

#include "poly.hpp"
#include "testutil.hpp"

using namespace psell;

namespace {

HermPoly random_poly(std::mt19937_64& rng, const VarLayout& layout, int max_terms = 5, unsigned max_exp = 3) {
    HermPoly p(layout);
    int terms = static_cast<int>(testutil::rnd_int(rng, 0, max_terms));
    for (int t = 0; t < terms; ++t) {
        std::vector<std::pair<int, unsigned>> factors;
        for (int v = 0; v < layout.vars(); ++v) {
            unsigned e = static_cast<unsigned>(testutil::rnd_int(rng, 0, max_exp));
            if (e > 0 && testutil::rnd_int(rng, 0, 1)) factors.emplace_back(v, e);
        }
        p.add_term(Monomial(std::move(factors)), testutil::random_grat(rng, 3));
    }
    return p;
}

}  // namespace

TEST_CASE("addition: cancellation, identity, like terms") {
    VarLayout layout{2};
    HermPoly z1 = HermPoly::variable(layout, layout.z(0));
    HermPoly i_const = HermPoly::constant(layout, GRat::i());

    CHECK((z1 + i_const) + (-z1) == i_const);
    std::mt19937_64 rng(1);
    HermPoly p = random_poly(rng, layout);
    CHECK(p + HermPoly::zero(layout) == p);
    HermPoly two_sq = HermPoly::term(layout, GRat(2), Monomial::var(layout.z(0), 2));
    HermPoly three_sq = HermPoly::term(layout, GRat(3), Monomial::var(layout.z(0), 2));
    CHECK(two_sq + three_sq == HermPoly::term(layout, GRat(5), Monomial::var(layout.z(0), 2)));
}

TEST_CASE("multiplication: difference of squares, identities") {
    VarLayout layout{1};
    HermPoly z = HermPoly::variable(layout, layout.z(0));
    HermPoly x = HermPoly::variable(layout, layout.chi(0));
    CHECK((z - x) * (z + x) == z * z - x * x);

    std::mt19937_64 rng(2);
    HermPoly p = random_poly(rng, layout);
    CHECK(p * HermPoly::constant(layout, GRat(1)) == p);

    // ((1+i) z1) * ((1-i) chi1) = 2 z1 chi1
    HermPoly a = HermPoly::term(layout, GRat(1, 1), Monomial::var(layout.z(0)));
    HermPoly b = HermPoly::term(layout, GRat(1, -1), Monomial::var(layout.chi(0)));
    CHECK(a * b == HermPoly::term(layout, GRat(2), Monomial::var(layout.z(0)).times(Monomial::var(layout.chi(0)))));
}

TEST_CASE("ring axioms on random triples") {
    VarLayout layout{2};
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        HermPoly a = random_poly(rng, layout), b = random_poly(rng, layout), c = random_poly(rng, layout);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("bar swap: examples, involution, homomorphism") {
    VarLayout layout{1};
    HermPoly iz = HermPoly::term(layout, GRat::i(), Monomial::var(layout.z(0)));
    HermPoly expect = HermPoly::term(layout, -GRat::i(), Monomial::var(layout.chi(0)));
    CHECK(iz.bar_swap() == expect);

    HermPoly w_term = HermPoly::term(layout, GRat(1, 1), Monomial::var(layout.w()));
    CHECK(w_term.bar_swap() == HermPoly::term(layout, GRat(1, -1), Monomial::var(layout.tau())));

    std::mt19937_64 rng(4);
    for (int t = 0; t < 60; ++t) {
        HermPoly a = random_poly(rng, layout), b = random_poly(rng, layout);
        CHECK(a.bar_swap().bar_swap() == a);
        CHECK((a * b).bar_swap() == a.bar_swap() * b.bar_swap());
        CHECK((a + b).bar_swap() == a.bar_swap() + b.bar_swap());
    }
}

TEST_CASE("substitute_w examples") {
    VarLayout layout{1};
    HermPoly w = HermPoly::variable(layout, layout.w());
    // S = tau + 2i z1^p chi1^p for p = 2
    HermPoly s = HermPoly::variable(layout, layout.tau()) +
                 HermPoly::term(layout, GRat(0, 2), Monomial::var(layout.z(0), 2).times(Monomial::var(layout.chi(0), 2)));
    CHECK(w.substitute_w(s) == s);
    CHECK((w * w).substitute_w(HermPoly::variable(layout, layout.tau())) ==
          HermPoly::variable(layout, layout.tau(), 2));

    // (1 - r w) with w <- tau + 2i z^2 chi^2 gives 1 - r tau - 2ir z^2 chi^2;
    // expected value built by hand, term by term.
    mpq_class r(3, 7);
    HermPoly p = HermPoly::constant(layout, GRat(1)) - HermPoly::term(layout, GRat(r), Monomial::var(layout.w()));
    HermPoly expect = HermPoly::constant(layout, GRat(1));
    expect.add_term(Monomial::var(layout.tau()), GRat(-r));
    expect.add_term(Monomial::var(layout.z(0), 2).times(Monomial::var(layout.chi(0), 2)),
                    GRat(mpq_class(0), mpq_class(-2 * r)));
    CHECK(p.substitute_w(s) == expect);

    CHECK_THROWS_AS(w.substitute_w(w), Error);
}

TEST_CASE("is_zero is exact") {
    VarLayout layout{1};
    CHECK(HermPoly::zero(layout).is_zero());
    HermPoly z = HermPoly::variable(layout, layout.z(0));
    CHECK((z - z).is_zero());
    CHECK(!HermPoly::term(layout, GRat(mpq_class(1, 1000000000)), Monomial::var(layout.z(0))).is_zero());
}

TEST_CASE("real-symmetric polynomials evaluate to real numbers on conjugate points") {
    VarLayout layout{2};
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        HermPoly a = random_poly(rng, layout, 4, 2);
        HermPoly sym = a + a.bar_swap();  // barSwap(sym) == sym
        CHECK(sym.bar_swap() == sym);
        std::vector<GRat> point(layout.vars(), GRat(0));
        for (int i = 0; i < layout.n; ++i) {
            point[layout.z(i)] = testutil::random_grat(rng, 2);
            point[layout.chi(i)] = point[layout.z(i)].conj();
        }
        point[layout.w()] = testutil::random_grat(rng, 2);
        point[layout.tau()] = point[layout.w()].conj();
        CHECK(sym.eval_exact(point).im() == 0);
    }
}

TEST_CASE("canonical text form round trips") {
    VarLayout layout{3};
    std::mt19937_64 rng(6);
    CHECK(HermPoly::zero(layout).str() == "0");
    CHECK(HermPoly::parse(layout, "0") == HermPoly::zero(layout));
    for (int t = 0; t < 80; ++t) {
        HermPoly p = random_poly(rng, layout);
        CHECK(HermPoly::parse(layout, p.str()) == p);
    }
    HermPoly q = HermPoly::parse(layout, "(1+0*i)*z1^2*x1 + (-1/2-3/4*i)*w");
    CHECK(q.coeff(Monomial::var(layout.w())) == GRat(mpq_class(-1, 2), mpq_class(-3, 4)));
    CHECK_THROWS_AS(HermPoly::parse(layout, "(1+0*i)*z9"), Error);
}

TEST_CASE("layout mismatch is rejected") {
    HermPoly a = HermPoly::zero(VarLayout{1});
    HermPoly b = HermPoly::zero(VarLayout{2});
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
}
