#ifndef INTERLACE_NUMBER_FIELD_HPP
#define INTERLACE_NUMBER_FIELD_HPP

#include <optional>
#include <string>
#include <vector>

#include "interlace/enumeration.hpp"
#include "interlace/polynomial.hpp"

namespace interlace {

// Field-level statements (dual order, minimal trace sets) are computed for
// the order Z[alpha]; they coincide with the ring of integers exactly when
// Z[alpha] is the full ring (the monogenic case). Callers assert that via a
// flag where it matters; nothing here tries to compute maximal orders.

/// An element gamma = g(alpha)/f'(alpha) of the dual order Z[alpha]^dual.
/// The trace is the coefficient of x^(d-1) in g (Euler-Jacobi identity for
/// deg g <= d-1 and monic f), an exact rational.
struct CodifferentElement {
    IntPolynomial base_poly;
    IntPolynomial numerator;
    Rat trace;
    bool totally_positive = false;
    std::vector<int> lambda_signs;
};

struct MinimalTraceSet {
    IntPolynomial base_poly;
    Int t_star;
    std::uint64_t count = 0;
    std::vector<CodifferentElement> elements;
};

/// Enclosure of Span(g(alpha)) = max_i g(alpha_i) - min_i g(alpha_i).
/// exact_zero iff g(alpha) is rational (minimal polynomial of degree 1).
struct SpanReport {
    IntPolynomial element;
    IntPolynomial min_poly;
    RationalInterval span;
    bool exact_zero = false;
    bool upper_bound_only = false;  ///< set by bounded searches
};

/// Right-hand side of the simplex flatness bound, reported as the coefficient
/// of the (unknown) universal constant: d * (1 + log d + count^(1/d)).
struct FlatnessReport {
    long degree = 0;
    std::uint64_t interlacer_count = 0;
    double coefficient_of_c = 0.0;
    std::string formula;
    std::optional<SpanReport> best_span;
};

/// b has length d and encodes g_b = sum_j b_j x^(d-j). For b arising from an
/// interlacer, the element has trace 1 and is totally positive.
CodifferentElement codifferent_element(const IntPolynomial& f, const std::vector<Int>& b,
                                       bool assert_irreducible = false);

/// Scans t = 1, 2, ..., t_max and returns the first nonempty trace level,
/// fully enumerated. Throws NoElementUpToTMax (with per-level zero counts)
/// when every level is empty.
MinimalTraceSet minimal_trace_set(const IntPolynomial& f, const Int& t_max, const EnumOptions& opts = {},
                                  bool assert_irreducible = false);

/// Minimal polynomial of 2*cos(2*pi/n), degree phi(n)/2, via the reciprocal
/// substitution applied to the n-th cyclotomic polynomial. n >= 3.
IntPolynomial real_cyclotomic_minpoly(long n);

/// n-th cyclotomic polynomial, exact.
IntPolynomial cyclotomic_polynomial(long n);

/// x^3 + x^2 - (3k^2+k+2) x - (2k^3+2k^2+2k+1); satisfies f_k(-k) = -1 and
/// f_k(-k-1) = 1 identically.
IntPolynomial cubic_family(const Int& k);

/// Requires f squarefree totally real, deg g <= deg f - 1.
SpanReport span_of(const IntPolynomial& f, const IntPolynomial& g, const Rat& eps);

/// Bounded exhaustive search over nonconstant g with coefficients in
/// [-coeff_bound, coeff_bound] and deg g <= deg f - 1, skipping rational
/// elements; returns the smallest span found. Candidates are canonicalized
/// modulo negation and integer shifts, both of which preserve the span. The
/// result is an upper bound for the lattice width of C(f).
SpanReport min_span_search(const IntPolynomial& f, const Int& coeff_bound, const Rat& eps);

FlatnessReport flatness_report(const IntPolynomial& f, std::uint64_t interlacer_count,
                               std::optional<Int> span_coeff_bound = std::nullopt,
                               const Rat& eps = rat(1, 1000000));

}  // namespace interlace

#endif
