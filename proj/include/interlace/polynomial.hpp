#ifndef INTERLACE_POLYNOMIAL_HPP
#define INTERLACE_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "interlace/interval.hpp"
#include "interlace/numeric.hpp"

namespace interlace {

/// Dense integer polynomial, coefficients stored in descending degree order
/// (coeffs()[0] is the leading coefficient). The zero polynomial is the empty
/// list and reports degree -1. Nonzero polynomials never carry a leading zero.
class IntPolynomial {
public:
    IntPolynomial() = default;

    /// From descending coefficients; leading zeros are stripped.
    static IntPolynomial from_coeffs(std::vector<Int> descending);

    /// Monomial c * x^k.
    static IntPolynomial monomial(const Int& c, std::size_t k);

    static IntPolynomial constant(const Int& c) { return monomial(c, 0); }

    /// Accepts either a comma-separated descending coefficient list
    /// ("1,-1,-1") or a sparse expression in one variable ("x^2 - x - 1").
    /// Whitespace-insensitive. Throws EmptyInput / ParseError.
    static IntPolynomial parse(const std::string& text);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Int& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    /// Coefficient of x^k (zero when k exceeds the degree).
    Int coeff(std::size_t k) const;

    /// Descending coefficient list (empty for zero).
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& c) const;

    IntPolynomial derivative() const;

    /// f(x + n): the Z-equivalence shift.
    IntPolynomial shift(const Int& n) const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    /// Certified enclosure of the image of the interval.
    RationalInterval eval_on(const RationalInterval& x) const;

    /// Exact sign of the value at a rational point (homogeneous integer
    /// evaluation, no rational arithmetic).
    int sign_at(const Rat& x) const;

    /// gcd of the coefficients, positive; content of zero is 0.
    Int content() const;
    IntPolynomial primitive_part() const;

    /// Quotient and remainder by a monic divisor (exact over Z).
    std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& divisor) const;

    /// True iff divisor is nonzero and divides *this exactly in Z[x];
    /// quotient returned through `q` on success.
    bool try_divide(const IntPolynomial& divisor, IntPolynomial* q = nullptr) const;

    /// Canonical sparse text: descending powers, explicit signs ("x^2 - x - 1").
    std::string to_string() const;

private:
    std::vector<Int> coeffs_;
};

/// Pseudo-remainder R with lc(B)^(deg A - deg B + 1) * A = Q*B + R, adjusted
/// so the scaling factor is positive (R is negated when lc(B)^(delta+1) < 0).
/// Requires deg A >= deg B >= 0.
IntPolynomial pseudo_rem_abs(const IntPolynomial& A, const IntPolynomial& B);

/// Polynomial gcd over Z via the primitive PRS, leading coefficient positive.
IntPolynomial gcd_z(const IntPolynomial& a, const IntPolynomial& b);

/// f / gcd(f, f'), primitive with positive leading coefficient (monic when f
/// is monic). The squarefree part: same distinct roots, all simple.
IntPolynomial squarefree_part(const IntPolynomial& f);

/// Exact resultant Res(f, g). Throws ZeroPolynomial when either side is zero.
Int resultant(const IntPolynomial& f, const IntPolynomial& g);

/// Exact discriminant: (-1)^(d(d-1)/2) Res(f, f') / lc(f). Requires deg >= 1.
Int discriminant(const IntPolynomial& f);

bool is_squarefree(const IntPolynomial& f);

/// Q-irreducibility by rational-root test plus exhaustive factor search under
/// the Landau-Mignotte coefficient bound. Degrees above `degree_cap` throw
/// DegreeCapExceeded; callers that know better assert irreducibility upstream.
bool is_irreducible(const IntPolynomial& f, long degree_cap = 10);

inline constexpr long kIrreducibilityDegreeCap = 10;

}  // namespace interlace

#endif
