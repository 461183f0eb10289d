#ifndef INTERLACE_ROOT_ISOLATION_HPP
#define INTERLACE_ROOT_ISOLATION_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "interlace/interval.hpp"
#include "interlace/polynomial.hpp"

namespace interlace {

/// Canonical Sturm chain of (f, f'), kept sign-faithful: pseudo-remainders
/// are taken with positive multipliers and contents stripped, so sign
/// variation counts match the textbook chain exactly.
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& f);

    int variations_at(const Rat& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    /// Distinct real roots of f in the open interval (a, b).
    /// Requires f(a) != 0 and f(b) != 0.
    long count_in(const Rat& a, const Rat& b) const;

    /// Distinct real roots of f on the whole line.
    long count_all() const;

    const IntPolynomial& poly() const { return chain_.front(); }

private:
    std::vector<IntPolynomial> chain_;
};

/// Ordered, pairwise-disjoint rational isolating intervals for the real roots
/// of a squarefree polynomial. A rational root appears as a degenerate [r, r]
/// interval; all other intervals have endpoints where the polynomial is
/// nonzero and of opposite signs.
struct RootIsolation {
    IntPolynomial poly;
    std::vector<RationalInterval> intervals;
    std::shared_ptr<const SturmChain> chain;

    std::size_t count() const { return intervals.size(); }
};

/// Throws NotSquarefree unless gcd(f, f') is constant.
RootIsolation isolate_roots(const IntPolynomial& f);

/// Sub-interval of width < eps still containing root `index`; deterministic
/// dyadic bisection with exact sign tests.
RationalInterval refine_root(const RootIsolation& iso, std::size_t index, const Rat& eps);

/// Exact sign of g at the index-th root of iso.poly. Zero is decided first
/// via gcd(f, g) (shared-root test on the isolating interval); otherwise the
/// interval is refined until an interval evaluation of g excludes zero.
int sign_at_root(const IntPolynomial& g, const RootIsolation& iso, std::size_t index);

long count_real_roots(const IntPolynomial& f);

/// All roots real, counted without multiplicity: Sturm count == degree.
bool is_totally_real(const IntPolynomial& f);

/// Squarefree integer polynomial whose roots are exactly the distinct values
/// g(alpha_i) over the roots of f: the squarefree part of Res_x(f(x), y - g(x)),
/// recovered by interpolation through d+1 integer resultants. Monic after
/// content removal when f is monic. Requires f squarefree, deg g < deg f.
IntPolynomial minpoly_of_element(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace interlace

#endif
