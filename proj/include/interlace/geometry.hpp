#ifndef INTERLACE_GEOMETRY_HPP
#define INTERLACE_GEOMETRY_HPP

#include <vector>

#include "interlace/interval.hpp"
#include "interlace/polynomial.hpp"
#include "interlace/root_isolation.hpp"

namespace interlace {

// Coefficient-vector convention used throughout: a vector b = (b_1, ..., b_d)
// denotes the polynomial sum_j b_j x^(d-j), so b_1 multiplies x^(d-1) and b_d
// is the constant term. Accordingly lambda_i = g(alpha_i) / f'(alpha_i).

/// Per-coordinate rational enclosure of the scaled simplex t*K(f): the convex
/// hull of the coefficient vectors of t*f(x)/(x - alpha_i). The first
/// coordinate is pinned to t; `bounds` covers the d-1 free coordinates.
struct SimplexBox {
    IntPolynomial poly;
    Int trace_scale;
    std::vector<RationalInterval> bounds;

    /// Integer candidates for free coordinate j (0-based): [ceil(lo), floor(hi)].
    std::pair<Int, Int> integer_range(std::size_t j) const;
};

/// Interval enclosures and exact signs of lambda_i = g(alpha_i)/f'(alpha_i),
/// plus the exact rational Res(f,g)/Disc(f) they multiply to (up to sign).
struct LambdaVector {
    std::vector<RationalInterval> values;
    std::vector<int> signs;  // exact, in root order
    Rat res_over_disc;

    bool all_positive() const {
        for (int s : signs)
            if (s <= 0) return false;
        return !signs.empty();
    }
    bool has_zero() const {
        for (int s : signs)
            if (s == 0) return true;
        return false;
    }
    Rat product_identity() const { return abs(res_over_disc); }
};

/// Integer matrix M with M_ij = tr(alpha^(2d-i-j)) (1-based i, j), i.e. the
/// Gram matrix of the moment-curve vertex matrix of C(f).
struct GramPowerMatrix {
    std::vector<std::vector<Int>> entries;
};

/// Newton power sums p_0..p_upto of the roots of a monic f, exact integers.
std::vector<Int> power_sums(const IntPolynomial& f, std::size_t upto);

/// Requires f monic squarefree.
GramPowerMatrix gram_power_matrix(const IntPolynomial& f);

/// Vertex coordinate enclosures of t*K(f), tightened until each endpoint is
/// within `precision` of the true vertex min/max.
SimplexBox vertex_boxes(const IntPolynomial& f, const Int& t, const Rat& precision = dyadic_eps(20));

/// Requires f squarefree totally real and deg g <= deg f - 1.
LambdaVector lambda_of(const IntPolynomial& f, const IntPolynomial& g);

/// Exact membership of the integer point p (length d, last coordinate must be
/// 1) in the closed cyclic polytope C(f): solve the Gram system for the
/// barycentric weights and check their signs and trace.
bool c_membership(const IntPolynomial& f, const std::vector<Int>& p);

/// Exact membership of the integer point q (length d, first coordinate must
/// equal t) in the closed simplex t*K(f): all lambda_i(q) >= 0.
bool k_membership(const IntPolynomial& f, const std::vector<Int>& q, const Int& t = Int(1));

/// Solve A x = rhs over Q by Gaussian elimination. Throws SingularGram.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> rhs);

}  // namespace interlace

#endif
