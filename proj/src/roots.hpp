#pragma once

#include <optional>
#include <utility>

#include "grat.hpp"

namespace psell {

// Exact nth root of a nonnegative integer, if one exists.
std::optional<mpz_class> integer_nth_root(const mpz_class& v, unsigned long n);

// Exact nth root of a nonnegative rational, if one exists.
std::optional<mpq_class> rational_nth_root(const mpq_class& v, unsigned long n);

// Integer solutions of a^2 + b^2 = n with a >= 0. Bounded search; callers
// stay at fixture scale. Returns nullopt if none (or n out of search range).
std::optional<std::pair<mpz_class, mpz_class>> sum_of_two_squares(const mpz_class& n);

// Some alpha in Q(i) with |alpha|^2 = t (t > 0), if representable.
std::optional<GRat> grat_of_norm(const mpq_class& t);

// Exact unimodular q-th root of a unimodular Gaussian rational.
std::optional<GRat> unimodular_qth_root(const GRat& nu, unsigned long q);

// Exact q-th root of an arbitrary GRat of the form t * phase with t
// rational: succeeds when both the modulus root and the phase root exist.
std::optional<GRat> grat_qth_root(const GRat& v, unsigned long q);

}  // namespace psell
