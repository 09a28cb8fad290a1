#include "roots.hpp"

namespace psell {

std::optional<mpz_class> integer_nth_root(const mpz_class& v, unsigned long n) {
    if (v < 0 || n == 0) return std::nullopt;
    mpz_class root;
    int exact = mpz_root(root.get_mpz_t(), v.get_mpz_t(), n);
    if (exact == 0) return std::nullopt;
    return root;
}

std::optional<mpq_class> rational_nth_root(const mpq_class& v, unsigned long n) {
    if (v < 0) return std::nullopt;
    auto num = integer_nth_root(v.get_num(), n);
    if (!num) return std::nullopt;
    auto den = integer_nth_root(v.get_den(), n);
    if (!den) return std::nullopt;
    mpq_class root(*num, *den);
    root.canonicalize();
    return root;
}

namespace {

constexpr long kSearchLimit = 4'000'000;     // bounds the root denominator scan
constexpr long kTrialDivisionLimit = 100'000;

struct GaussInt {
    mpz_class re, im;
};

GaussInt gmul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

mpz_class round_div(const mpz_class& num, const mpz_class& den) {
    // nearest integer to num/den, den > 0
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) ++q;
    return q;
}

GaussInt gmod(const GaussInt& a, const GaussInt& b) {
    mpz_class nb = b.re * b.re + b.im * b.im;
    mpz_class xr = a.re * b.re + a.im * b.im;
    mpz_class xi = a.im * b.re - a.re * b.im;
    GaussInt q{round_div(xr, nb), round_div(xi, nb)};
    GaussInt qb = gmul(q, b);
    return {a.re - qb.re, a.im - qb.im};
}

GaussInt ggcd(GaussInt a, GaussInt b) {
    while (b.re != 0 || b.im != 0) {
        GaussInt r = gmod(a, b);
        a = b;
        b = r;
    }
    return a;
}

// a^2 + b^2 = p for prime p with p = 2 or p % 4 == 1.
std::optional<GaussInt> prime_two_squares(const mpz_class& p) {
    if (p == 2) return GaussInt{1, 1};
    if (p % 4 != 1) return std::nullopt;
    // s with s^2 = -1 mod p, via s = g^((p-1)/4)
    mpz_class exp = (p - 1) / 4;
    for (long base = 2; base < 1000; ++base) {
        mpz_class g(base), s;
        mpz_powm(s.get_mpz_t(), g.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
        mpz_class chk = (s * s) % p;
        if (chk == p - 1) {
            GaussInt d = ggcd(GaussInt{p, 0}, GaussInt{s, 1});
            mpz_class norm = d.re * d.re + d.im * d.im;
            if (norm == p) return GaussInt{abs(d.re), abs(d.im)};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::pair<mpz_class, mpz_class>> sum_of_two_squares(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    if (n == 0) return std::make_pair(mpz_class(0), mpz_class(0));
    // Factor; primes = 3 mod 4 must occur to even powers.
    GaussInt acc{1, 0};
    mpz_class rest = n;
    auto absorb_prime = [&](const mpz_class& p, unsigned long e) -> bool {
        if (p % 4 == 3) {
            if (e % 2 != 0) return false;
            mpz_class half;
            mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), e / 2);
            acc = gmul(acc, GaussInt{half, 0});
            return true;
        }
        auto rep = prime_two_squares(p);
        if (!rep) return false;
        for (unsigned long k = 0; k < e; ++k) acc = gmul(acc, *rep);
        return true;
    };
    for (mpz_class p = 2; p * p <= rest && p <= kTrialDivisionLimit; p == 2 ? ++p : p += 2) {
        if (rest % p != 0) continue;
        unsigned long e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (!absorb_prime(p, e)) return std::nullopt;
    }
    if (rest > 1) {
        mpz_class root = sqrt(rest);
        if (root * root == rest) {
            // exact square of an unfactored part
            acc = gmul(acc, GaussInt{root, 0});
        } else if (mpz_probab_prime_p(rest.get_mpz_t(), 30) > 0) {
            if (!absorb_prime(rest, 1)) return std::nullopt;
        } else {
            return std::nullopt;  // unfactored composite
        }
    }
    return std::make_pair(abs(acc.re), abs(acc.im));
}

std::optional<GRat> grat_of_norm(const mpq_class& t) {
    if (t <= 0) return std::nullopt;
    // |x/d + (y/d)i|^2 = t  with d = den(t): x^2 + y^2 = num(t)*den(t).
    auto sq = sum_of_two_squares(t.get_num() * t.get_den());
    if (!sq) return std::nullopt;
    return GRat(mpq_class(sq->first, t.get_den()), mpq_class(sq->second, t.get_den()));
}

std::optional<GRat> unimodular_qth_root(const GRat& nu, unsigned long q) {
    if (!nu.is_unimodular()) return std::nullopt;
    if (q == 0) return std::nullopt;
    if (q == 1) return nu;
    // nu = (A + Bi)/c in lowest terms with A^2 + B^2 = c^2. Any exact root
    // mu = (x + yi)/m in lowest terms has m^q = c, so enumerate x^2+y^2=m^2.
    mpz_class c = lcm(nu.re().get_den(), nu.im().get_den());
    auto mroot = integer_nth_root(c, q);
    if (!mroot) return std::nullopt;
    mpz_class m = *mroot;
    if (m > kSearchLimit) return std::nullopt;
    // Scan from +m downward so the principal-looking root wins ties.
    for (mpz_class x = m; x >= -m; --x) {
        mpz_class rem = m * m - x * x;
        mpz_class y = sqrt(rem);
        if (y * y != rem) continue;
        for (int sign = 0; sign < 2; ++sign) {
            mpz_class yy = sign == 0 ? y : mpz_class(-y);
            GRat cand(mpq_class(x, m), mpq_class(yy, m));
            if (cand.pow(q) == nu) return cand;
            if (y == 0) break;
        }
    }
    return std::nullopt;
}

std::optional<GRat> grat_qth_root(const GRat& v, unsigned long q) {
    if (v.is_zero()) return GRat(0);
    if (q == 1) return v;
    // Split v = t * phase with t = sqrt(|v|^2) when that square root is
    // rational; otherwise no root expressible over the Gaussian rationals
    // of this shape exists.
    auto t2 = rational_nth_root(v.norm(), 2);
    if (!t2) return std::nullopt;
    mpq_class t = *t2;
    auto troot = rational_nth_root(t, q);
    if (!troot) return std::nullopt;
    GRat phase = v / GRat(t);
    auto proot = unimodular_qth_root(phase, q);
    if (!proot) return std::nullopt;
    return GRat(*troot) * *proot;
}

}  // namespace psell
