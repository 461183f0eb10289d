#include "interlace/root_isolation.hpp"

#include <algorithm>
#include <utility>

#include "interlace/errors.hpp"

namespace interlace {

SturmChain::SturmChain(const IntPolynomial& f) {
    if (f.is_zero()) throw ZeroPolynomial("Sturm chain of zero");
    IntPolynomial p0 = f.primitive_part();
    chain_.push_back(p0);
    if (p0.degree() >= 1) {
        chain_.push_back(p0.derivative().primitive_part());
        while (chain_.back().degree() >= 1) {
            const IntPolynomial& prev = chain_[chain_.size() - 2];
            const IntPolynomial& last = chain_.back();
            IntPolynomial r = pseudo_rem_abs(prev, last);
            if (r.is_zero()) break;
            chain_.push_back((-r).primitive_part());
        }
    }
}

namespace {

int count_variations(const std::vector<int>& signs) {
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int SturmChain::variations_at(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(p.sign_at(x));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) {
        int s = sign_of(p.leading());
        if (p.degree() % 2 != 0) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(sign_of(p.leading()));
    return count_variations(signs);
}

long SturmChain::count_in(const Rat& a, const Rat& b) const {
    if (a >= b) return 0;
    return variations_at(a) - variations_at(b);
}

long SturmChain::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

long count_real_roots(const IntPolynomial& f) {
    if (f.is_zero()) throw ZeroPolynomial("root count of zero");
    if (f.degree() == 0) return 0;
    return SturmChain(f).count_all();
}

bool is_totally_real(const IntPolynomial& f) {
    if (f.is_zero()) throw ZeroPolynomial("totally-real test of zero");
    return count_real_roots(f) == f.degree();
}

namespace {

/// Strict Cauchy bound: every real root lies in (-B, B).
Int cauchy_bound(const IntPolynomial& f) {
    Int maxc(0);
    const auto& cs = f.coeffs();
    for (std::size_t i = 1; i < cs.size(); ++i) maxc = std::max(maxc, Int(abs(cs[i])));
    const Int lead = abs(cs[0]);
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), maxc.get_mpz_t(), lead.get_mpz_t());
    return q + 1;
}

struct IsolationContext {
    const IntPolynomial& f;
    const SturmChain& chain;
    std::vector<RationalInterval> out;

    // Both endpoints are non-roots of f; `va - vb` roots lie strictly inside.
    void bisect(const Rat& a, const Rat& b, int va, int vb) {
        long n = va - vb;
        if (n <= 0) return;
        if (n == 1) {
            out.emplace_back(a, b);
            return;
        }
        Rat mid = (a + b) / 2;
        if (f.sign_at(mid) != 0) {
            int vm = chain.variations_at(mid);
            bisect(a, mid, va, vm);
            bisect(mid, b, vm, vb);
            return;
        }
        // Exact rational root at the midpoint: emit a point interval and
        // shrink a symmetric gap around it until the gap holds only this root.
        out.push_back(RationalInterval::point(mid));
        Rat delta = (b - a) / 4;
        while (true) {
            Rat lo = mid - delta, hi = mid + delta;
            if (f.sign_at(lo) != 0 && f.sign_at(hi) != 0 && chain.count_in(lo, hi) == 1) {
                int vlo = chain.variations_at(lo);
                int vhi = chain.variations_at(hi);
                bisect(a, lo, va, vlo);
                // The emitted point sits between the two recursions; ordering
                // is restored by the caller's sort.
                bisect(hi, b, vhi, vb);
                return;
            }
            delta /= 2;
        }
    }
};

}  // namespace

RootIsolation isolate_roots(const IntPolynomial& f) {
    if (f.is_zero() || !is_squarefree(f)) throw NotSquarefree("isolate_roots requires a squarefree polynomial");
    auto chain = std::make_shared<SturmChain>(f);
    RootIsolation iso;
    iso.poly = f;
    iso.chain = chain;
    if (f.degree() < 1) return iso;
    Int bound = cauchy_bound(f);
    Rat a(-bound), b(bound);
    IsolationContext ctx{f, *chain, {}};
    ctx.bisect(a, b, chain->variations_at(a), chain->variations_at(b));
    std::sort(ctx.out.begin(), ctx.out.end(),
              [](const RationalInterval& x, const RationalInterval& y) { return x.lo < y.lo; });
    iso.intervals = std::move(ctx.out);
    return iso;
}

RationalInterval refine_root(const RootIsolation& iso, std::size_t index, const Rat& eps) {
    if (index >= iso.intervals.size()) throw IndexOutOfRange("root index " + std::to_string(index));
    if (sign_of(eps) <= 0) throw NonPositiveEps();
    RationalInterval cur = iso.intervals[index];
    if (cur.is_point()) return cur;
    const IntPolynomial& f = iso.poly;
    int slo = f.sign_at(cur.lo);
    while (cur.width() >= eps) {
        Rat mid = cur.midpoint();
        int sm = f.sign_at(mid);
        if (sm == 0) return RationalInterval::point(mid);
        if (sm == slo) {
            cur.lo = mid;
        } else {
            cur.hi = mid;
        }
    }
    return cur;
}

int sign_at_root(const IntPolynomial& g, const RootIsolation& iso, std::size_t index) {
    if (index >= iso.intervals.size()) throw IndexOutOfRange("root index " + std::to_string(index));
    if (g.is_zero()) return 0;
    RationalInterval cur = iso.intervals[index];
    if (cur.is_point()) return g.sign_at(cur.lo);
    const IntPolynomial& f = iso.poly;
    // Decide g(alpha) == 0 exactly: alpha is a root of g iff it is a root of
    // gcd(f, g), testable by a Sturm count on the isolating interval.
    IntPolynomial h = gcd_z(f, g);
    if (h.degree() >= 1 && SturmChain(h).count_in(cur.lo, cur.hi) > 0) return 0;
    int slo = f.sign_at(cur.lo);
    while (true) {
        RationalInterval val = g.eval_on(cur);
        int s = val.definite_sign();
        if (s != 0) return s;
        Rat mid = cur.midpoint();
        int sm = f.sign_at(mid);
        if (sm == 0) return g.sign_at(mid);  // alpha is exactly this rational
        if (sm == slo) {
            cur.lo = mid;
        } else {
            cur.hi = mid;
        }
    }
}

// ---------------------------------------------------------------------------
// minimal polynomial of g(alpha)

namespace {

/// Lagrange interpolation through (nodes[i], values[i]), exact over Q.
std::vector<Rat> interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values) {
    std::size_t n = nodes.size();
    std::vector<Rat> acc(n, Rat(0));  // ascending coefficients
    for (std::size_t i = 0; i < n; ++i) {
        // basis_i(x) = prod_{j != i} (x - x_j) / (x_i - x_j)
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis.push_back(Rat(0));
            for (std::size_t k = basis.size() - 1; k > 0; --k)
                basis[k] = basis[k] - nodes[j] * basis[k - 1];
            denom *= nodes[i] - nodes[j];
        }
        // basis currently holds descending coefficients of the numerator.
        Rat w = values[i] / denom;
        std::size_t deg = basis.size() - 1;
        for (std::size_t k = 0; k < basis.size(); ++k) acc[deg - k] += basis[k] * w;
    }
    return acc;
}

}  // namespace

IntPolynomial minpoly_of_element(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || !is_squarefree(f)) throw NotSquarefree("minpoly_of_element requires squarefree f");
    long d = f.degree();
    if (d < 1) throw DegreeTooSmall("base polynomial must have degree >= 1");
    if (g.degree() >= d) throw DegreeViolation("deg g must be < deg f");
    if (g.degree() <= 0) {
        // Rational element: minimal polynomial x - c.
        Int c = g.is_zero() ? Int(0) : g.coeff(0);
        return IntPolynomial::from_coeffs({Int(1), -c});
    }
    // R(y) = Res_x(f(x), y - g(x)) has y-degree d; interpolate it from d+1
    // plain integer resultants at integer nodes.
    std::vector<Rat> nodes, values;
    for (long j = 0; j <= d; ++j) {
        Int y = (j % 2 == 0) ? Int(j / 2) : Int(-(j + 1) / 2);
        IntPolynomial h = -g + IntPolynomial::constant(y);
        nodes.emplace_back(y);
        values.emplace_back(resultant(f, h));
    }
    std::vector<Rat> asc = interpolate(nodes, values);
    Int denom_lcm(1);
    for (const auto& c : asc) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> desc(asc.size());
    for (std::size_t k = 0; k < asc.size(); ++k) {
        Rat scaled = asc[k] * denom_lcm;
        desc[asc.size() - 1 - k] = scaled.get_num();
    }
    IntPolynomial R = IntPolynomial::from_coeffs(std::move(desc));
    if (R.is_zero()) throw Error("Internal", "interpolated resultant vanished");
    IntPolynomial m = squarefree_part(R);
    return m;
}

}  // namespace interlace
