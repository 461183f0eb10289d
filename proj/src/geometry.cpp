#include "interlace/geometry.hpp"

#include <cstddef>
#include <utility>

#include "interlace/errors.hpp"

namespace interlace {

std::pair<Int, Int> SimplexBox::integer_range(std::size_t j) const {
    if (j >= bounds.size()) throw IndexOutOfRange("box coordinate " + std::to_string(j));
    return {ceil_rat(bounds[j].lo), floor_rat(bounds[j].hi)};
}

std::vector<Int> power_sums(const IntPolynomial& f, std::size_t upto) {
    if (!f.is_monic()) throw NotMonic("power sums need a monic polynomial");
    std::size_t d = static_cast<std::size_t>(f.degree());
    // e_k with signs from the coefficients: f = x^d + c_1 x^(d-1) + ... + c_d,
    // e_k = (-1)^k c_k.
    std::vector<Int> e(d + 1, Int(0));
    e[0] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        Int c = f.coeff(d - k);
        e[k] = (k % 2 == 0) ? c : Int(-c);
    }
    std::vector<Int> p(upto + 1, Int(0));
    p[0] = Int(static_cast<long>(d));
    for (std::size_t k = 1; k <= upto; ++k) {
        Int acc(0);
        // p_k = sum_{i=1..min(k,d)} (-1)^(i-1) e_i p_{k-i}  (+ (-1)^(k-1) k e_k for k <= d)
        std::size_t lim = std::min(k, d);
        for (std::size_t i = 1; i <= lim; ++i) {
            Int term = e[i] * ((i == k) ? Int(static_cast<long>(k)) : p[k - i]);
            if (i % 2 == 0) acc -= term;
            else acc += term;
        }
        p[k] = acc;
    }
    return p;
}

GramPowerMatrix gram_power_matrix(const IntPolynomial& f) {
    if (f.is_zero() || !f.is_monic()) throw NotMonic("gram_power_matrix requires a monic polynomial");
    std::size_t d = static_cast<std::size_t>(f.degree());
    std::vector<Int> p = power_sums(f, 2 * d >= 2 ? 2 * d - 2 : 0);
    GramPowerMatrix g;
    g.entries.assign(d, std::vector<Int>(d));
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = 1; j <= d; ++j) g.entries[i - 1][j - 1] = p[2 * d - i - j];
    return g;
}

namespace {

/// Horner prefixes of a monic f: q_j(y) = y^j + c_1 y^(j-1) + ... + c_j, so
/// that the coefficient of x^(d-1-j) in f(x)/(x - alpha) equals q_j(alpha).
std::vector<IntPolynomial> quotient_coefficient_polys(const IntPolynomial& f) {
    std::size_t d = static_cast<std::size_t>(f.degree());
    std::vector<IntPolynomial> q;
    q.reserve(d);
    std::vector<Int> prefix{Int(1)};
    for (std::size_t j = 1; j <= d - 1; ++j) {
        prefix.push_back(f.coeff(d - j));
        q.push_back(IntPolynomial::from_coeffs(prefix));
    }
    return q;
}

void require_enumerable(const IntPolynomial& f) {
    if (f.is_zero() || f.degree() < 2) throw DegreeTooSmall("degree >= 2 required");
    if (!f.is_monic()) throw NotMonic("monic polynomial required");
    if (!is_squarefree(f)) throw NotSquarefree(f.to_string());
    if (!is_totally_real(f)) throw NotTotallyReal(f.to_string());
}

}  // namespace

SimplexBox vertex_boxes(const IntPolynomial& f, const Int& t, const Rat& precision) {
    require_enumerable(f);
    if (t < 1) throw NonPositiveTrace("trace scale must be >= 1");
    if (sign_of(precision) <= 0) throw NonPositiveEps("precision must be positive");
    std::size_t d = static_cast<std::size_t>(f.degree());
    RootIsolation iso = isolate_roots(f);
    std::vector<IntPolynomial> q = quotient_coefficient_polys(f);

    // Refine roots until every vertex-coordinate enclosure is narrower than
    // the requested precision.
    Rat eps = precision;
    std::vector<RationalInterval> roots(d);
    std::vector<RationalInterval> bounds;
    for (int attempt = 0;; ++attempt) {
        for (std::size_t i = 0; i < d; ++i) roots[i] = refine_root(iso, i, eps);
        bounds.clear();
        Rat worst(0);
        for (std::size_t j = 0; j < d - 1; ++j) {
            RationalInterval cover = scale(q[j].eval_on(roots[0]), Rat(t));
            for (std::size_t i = 1; i < d; ++i) cover = hull(cover, scale(q[j].eval_on(roots[i]), Rat(t)));
            Rat slack = q[j].eval_on(roots[0]).width();
            for (std::size_t i = 1; i < d; ++i) slack = std::max(slack, q[j].eval_on(roots[i]).width());
            worst = std::max(worst, slack * Rat(t));
            bounds.push_back(cover);
        }
        if (worst < precision || attempt >= 6) break;
        eps /= 16;
    }
    SimplexBox box;
    box.poly = f;
    box.trace_scale = t;
    box.bounds = std::move(bounds);
    return box;
}

LambdaVector lambda_of(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || f.degree() < 1) throw DegreeTooSmall("base polynomial must have degree >= 1");
    if (!is_squarefree(f)) throw NotSquarefree(f.to_string());
    if (!is_totally_real(f)) throw NotTotallyReal(f.to_string());
    if (g.degree() > f.degree() - 1) throw DegreeViolation("deg g must be <= deg f - 1");
    std::size_t d = static_cast<std::size_t>(f.degree());
    RootIsolation iso = isolate_roots(f);
    IntPolynomial fp = f.derivative();

    LambdaVector lv;
    lv.values.reserve(d);
    lv.signs.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        int sg = g.is_zero() ? 0 : sign_at_root(g, iso, i);
        int sfp = sign_at_root(fp, iso, i);
        lv.signs.push_back(sg * sfp);
        // Enclosure: refine until f' is bounded away from zero, then divide.
        Rat eps = dyadic_eps(16);
        while (true) {
            RationalInterval r = refine_root(iso, i, eps);
            RationalInterval den = fp.eval_on(r);
            if (!den.contains_zero()) {
                lv.values.push_back(divide(g.eval_on(r), den));
                break;
            }
            eps /= 256;
        }
    }
    Int disc = discriminant(f);
    if (disc == 0) throw NotSquarefree("vanishing discriminant");
    if (g.is_zero()) {
        lv.res_over_disc = Rat(0);
    } else {
        lv.res_over_disc = rat(resultant(f, g), disc);
    }
    return lv;
}

std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> rhs) {
    std::size_t n = A.size();
    if (rhs.size() != n) throw DimensionMismatch("matrix/rhs size");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sign_of(A[pivot][col]) == 0) ++pivot;
        if (pivot == n) throw SingularGram("no pivot in column " + std::to_string(col));
        std::swap(A[pivot], A[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || sign_of(A[row][col]) == 0) continue;
            Rat factor = A[row][col] / A[col][col];
            for (std::size_t k = col; k < n; ++k) A[row][k] -= factor * A[col][k];
            rhs[row] -= factor * rhs[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / A[i][i];
    return x;
}

bool c_membership(const IntPolynomial& f, const std::vector<Int>& p) {
    require_enumerable(f);
    std::size_t d = static_cast<std::size_t>(f.degree());
    if (p.size() != d) throw DimensionMismatch("point has length " + std::to_string(p.size()));
    if (p[d - 1] != 1) return false;  // moment curve points end in 1

    GramPowerMatrix G = gram_power_matrix(f);
    std::vector<std::vector<Rat>> A(d, std::vector<Rat>(d));
    std::vector<Rat> rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
        rhs[i] = Rat(p[i]);
        for (std::size_t j = 0; j < d; ++j) A[i][j] = Rat(G.entries[i][j]);
    }
    std::vector<Rat> mu = solve_linear(std::move(A), std::move(rhs));

    // u(x) = sum_j mu_j x^(d-j); the barycentric weights are lambda_i = u(alpha_i).
    Int lcm(1);
    for (const auto& m : mu) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.get_den().get_mpz_t());
    std::vector<Int> desc(d);
    for (std::size_t j = 0; j < d; ++j) {
        Rat scaled = mu[j] * lcm;
        desc[j] = scaled.get_num();
    }
    IntPolynomial u_scaled = IntPolynomial::from_coeffs(std::move(desc));

    RootIsolation iso = isolate_roots(f);
    for (std::size_t i = 0; i < d; ++i)
        if (!u_scaled.is_zero() && sign_at_root(u_scaled, iso, i) < 0) return false;
    if (u_scaled.is_zero()) return false;  // zero weights cannot sum to 1

    // Exact trace: sum_i u(alpha_i) = sum_j mu_j p_(d-j); must equal 1.
    std::vector<Int> ps = power_sums(f, d - 1);
    Rat trace(0);
    for (std::size_t j = 0; j < d; ++j) trace += mu[j] * Rat(ps[d - 1 - j]);
    return trace == 1;
}

bool k_membership(const IntPolynomial& f, const std::vector<Int>& q, const Int& t) {
    require_enumerable(f);
    std::size_t d = static_cast<std::size_t>(f.degree());
    if (q.size() != d) throw DimensionMismatch("point has length " + std::to_string(q.size()));
    if (q[0] != t) return false;
    std::vector<Int> desc(q.begin(), q.end());
    IntPolynomial g = IntPolynomial::from_coeffs(std::move(desc));
    if (g.is_zero()) return false;
    RootIsolation iso = isolate_roots(f);
    IntPolynomial fp = f.derivative();
    for (std::size_t i = 0; i < d; ++i) {
        int sg = sign_at_root(g, iso, i);
        if (sg == 0) continue;  // boundary: lambda_i = 0 is allowed (closed)
        if (sg != sign_at_root(fp, iso, i)) return false;
    }
    return true;
}

}  // namespace interlace
