#include "interlace/number_field.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "interlace/errors.hpp"
#include "interlace/root_isolation.hpp"

namespace interlace {

namespace {

void require_field_base(const IntPolynomial& f, bool assert_irreducible) {
    if (f.is_zero() || f.degree() < 1) throw DegreeTooSmall("degree >= 1 required");
    if (!f.is_monic()) throw NotMonic("monic polynomial required");
    if (!is_totally_real(f)) throw NotTotallyReal(f.to_string());
    if (!assert_irreducible) {
        bool irr;
        try {
            irr = is_irreducible(f);
        } catch (const DegreeCapExceeded&) {
            throw NotIrreducible("degree exceeds the irreducibility cap; pass assert_irreducible");
        }
        if (!irr) throw NotIrreducible(f.to_string());
    }
}

}  // namespace

CodifferentElement codifferent_element(const IntPolynomial& f, const std::vector<Int>& b, bool assert_irreducible) {
    require_field_base(f, assert_irreducible);
    std::size_t d = static_cast<std::size_t>(f.degree());
    if (b.size() != d) throw DimensionMismatch("coefficient vector must have length d");

    CodifferentElement el;
    el.base_poly = f;
    el.numerator = IntPolynomial::from_coeffs(std::vector<Int>(b.begin(), b.end()));
    el.trace = Rat(b[0]);  // coefficient of x^(d-1)

    RootIsolation iso = isolate_roots(f);
    IntPolynomial fp = f.derivative();
    el.lambda_signs.reserve(d);
    bool all_pos = true;
    for (std::size_t i = 0; i < d; ++i) {
        int s = (el.numerator.is_zero() ? 0 : sign_at_root(el.numerator, iso, i)) * sign_at_root(fp, iso, i);
        el.lambda_signs.push_back(s);
        all_pos = all_pos && s > 0;
    }
    el.totally_positive = all_pos;
    return el;
}

MinimalTraceSet minimal_trace_set(const IntPolynomial& f, const Int& t_max, const EnumOptions& opts,
                                  bool assert_irreducible) {
    require_field_base(f, assert_irreducible);
    if (f.degree() < 2) throw DegreeTooSmall("degree >= 2 required");
    if (t_max < 1) throw NonPositiveTrace("t_max must be >= 1");
    std::vector<std::uint64_t> zero_counts;
    for (Int t(1); t <= t_max; ++t) {
        InterlacerSet level = enumerate_trace_t(f, t, opts);
        if (!level.members.empty()) {
            MinimalTraceSet out;
            out.base_poly = f;
            out.t_star = t;
            out.count = level.members.size();
            out.elements.reserve(level.members.size());
            for (const auto& v : level.members) out.elements.push_back(codifferent_element(f, v, assert_irreducible));
            return out;
        }
        zero_counts.push_back(0);
    }
    throw NoElementUpToTMax(std::move(zero_counts));
}

IntPolynomial cyclotomic_polynomial(long n) {
    if (n < 1) throw ArgumentTooSmall("cyclotomic index must be >= 1");
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
    std::vector<Int> top(static_cast<std::size_t>(n) + 1, Int(0));
    top[0] = 1;
    top[static_cast<std::size_t>(n)] = -1;
    IntPolynomial phi = IntPolynomial::from_coeffs(std::move(top));
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = phi.divmod_monic(cyclotomic_polynomial(d));
        if (!r.is_zero()) throw Error("Internal", "cyclotomic division not exact");
        phi = std::move(q);
    }
    return phi;
}

IntPolynomial real_cyclotomic_minpoly(long n) {
    if (n < 3) throw ArgumentTooSmall("need n >= 3");
    IntPolynomial phi = cyclotomic_polynomial(n);
    std::size_t m = static_cast<std::size_t>(phi.degree());  // = phi(n), even for n >= 3
    std::size_t half = m / 2;
    // Phi_n is palindromic, so Phi_n(x)/x^(m/2) = c_half + sum_k c_(half+k) (x^k + x^-k)
    // and x^k + x^-k = v_k(x + 1/x) with v_0 = 2, v_1 = y, v_(k+1) = y v_k - v_(k-1).
    IntPolynomial result = IntPolynomial::constant(phi.coeff(half));
    IntPolynomial v_prev = IntPolynomial::constant(Int(2));
    IntPolynomial v_cur = IntPolynomial::from_coeffs({Int(1), Int(0)});
    IntPolynomial y = v_cur;
    for (std::size_t k = 1; k <= half; ++k) {
        result = result + v_cur * phi.coeff(half + k);
        IntPolynomial v_next = y * v_cur - v_prev;
        v_prev = std::move(v_cur);
        v_cur = std::move(v_next);
    }
    return result;
}

IntPolynomial cubic_family(const Int& k) {
    Int c1(1);
    Int c2 = -(3 * k * k + k + 2);
    Int c3 = -(2 * k * k * k + 2 * k * k + 2 * k + 1);
    return IntPolynomial::from_coeffs({Int(1), c1, c2, c3});
}

SpanReport span_of(const IntPolynomial& f, const IntPolynomial& g, const Rat& eps) {
    if (sign_of(eps) <= 0) throw NonPositiveEps();
    if (f.is_zero() || !is_squarefree(f)) throw NotSquarefree("span_of requires squarefree f");
    if (!is_totally_real(f)) throw NotTotallyReal(f.to_string());
    SpanReport rep;
    rep.element = g;
    rep.min_poly = minpoly_of_element(f, g);
    if (rep.min_poly.degree() <= 1) {
        rep.exact_zero = true;
        rep.span = RationalInterval::point(Rat(0));
        return rep;
    }
    RootIsolation iso = isolate_roots(rep.min_poly);
    if (static_cast<long>(iso.count()) != rep.min_poly.degree())
        throw NotTotallyReal("conjugates of the element are not all real");
    Rat half = eps / 2;
    RationalInterval lowest = refine_root(iso, 0, half);
    RationalInterval highest = refine_root(iso, iso.count() - 1, half);
    rep.span = RationalInterval(highest.lo - lowest.hi, highest.hi - lowest.lo);
    return rep;
}

SpanReport min_span_search(const IntPolynomial& f, const Int& coeff_bound, const Rat& eps) {
    if (f.is_zero() || f.degree() < 2) throw EmptySearchSpace("need deg f >= 2");
    if (coeff_bound < 1) throw EmptySearchSpace("coefficient bound must be >= 1");
    std::size_t d = static_cast<std::size_t>(f.degree());
    std::optional<SpanReport> best;
    // Span is invariant under g -> -g and g -> g + n, so scan leading
    // coefficient > 0 and constant term 0 only.
    for (std::size_t deg = 1; deg + 1 <= d; ++deg) {
        std::vector<Int> coeffs(deg + 1, -coeff_bound);
        coeffs[0] = 1;
        coeffs[deg] = 0;  // constant term pinned; spans are shift-invariant
        while (true) {
            SpanReport rep = span_of(f, IntPolynomial::from_coeffs(coeffs), eps);
            if (!rep.exact_zero) {
                if (!best || rep.span.hi < best->span.hi) best = rep;
            }
            // odometer over coeffs[0..deg-1] (constant term stays 0)
            std::size_t pos = deg - 1;
            bool done = false;
            while (true) {
                if (coeffs[pos] < coeff_bound) {
                    ++coeffs[pos];
                    break;
                }
                coeffs[pos] = (pos == 0) ? Int(1) : -coeff_bound;
                if (pos == 0) {
                    done = true;
                    break;
                }
                --pos;
            }
            if (done) break;
        }
    }
    if (!best) throw EmptySearchSpace("every candidate was rational");
    best->upper_bound_only = true;
    return *best;
}

FlatnessReport flatness_report(const IntPolynomial& f, std::uint64_t interlacer_count,
                               std::optional<Int> span_coeff_bound, const Rat& eps) {
    if (f.is_zero() || f.degree() < 1) throw DegreeTooSmall("degree >= 1 required");
    FlatnessReport rep;
    rep.degree = f.degree();
    rep.interlacer_count = interlacer_count;
    double dd = static_cast<double>(rep.degree);
    double root = interlacer_count == 0 ? 0.0 : std::pow(static_cast<double>(interlacer_count), 1.0 / dd);
    rep.coefficient_of_c = dd * (1.0 + std::log(dd) + root);
    std::ostringstream os;
    os << "c * " << rep.degree << " * (1 + log(" << rep.degree << ") + " << interlacer_count << "^(1/" << rep.degree
       << "))";
    rep.formula = os.str();
    if (span_coeff_bound) rep.best_span = min_span_search(f, *span_coeff_bound, eps);
    return rep;
}

}  // namespace interlace
