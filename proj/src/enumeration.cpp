#include "interlace/enumeration.hpp"

#include <algorithm>
#include <utility>

#include "interlace/errors.hpp"

namespace interlace {

std::vector<IntPolynomial> InterlacerSet::member_polynomials() const {
    std::vector<IntPolynomial> out;
    out.reserve(members.size());
    for (const auto& v : members) out.push_back(IntPolynomial::from_coeffs(v));
    return out;
}

namespace {

void require_enumerable(const IntPolynomial& f) {
    if (f.is_zero() || f.degree() < 2) throw DegreeTooSmall("degree >= 2 required");
    if (!f.is_monic()) throw NotMonic("monic polynomial required");
    if (!is_squarefree(f)) throw NotSquarefree(f.to_string());
    if (!is_totally_real(f)) throw NotTotallyReal(f.to_string());
}

struct LowerBoundResult {
    bool empty = false;
    std::optional<Int> bound;
};

/// For p contained in [0, inf): the achievable supremum of c + v*p over the
/// boxes is chi + (v >= 0 ? v*p.hi : v*p.lo), nondecreasing in v, so the
/// feasible v form an up-set. Returns its smallest integer (or all / empty).
LowerBoundResult feasible_lower_bound(const Rat& chi, const RationalInterval& p, bool strict) {
    bool c_reaches = strict ? sign_of(chi) > 0 : sign_of(chi) >= 0;
    if (c_reaches) {
        if (sign_of(p.lo) == 0) return {};  // flat on the negative side: every v feasible
        Rat beta = -chi / p.lo;
        return {false, strict ? Int(floor_rat(beta) + 1) : ceil_rat(beta)};
    }
    if (sign_of(p.hi) == 0) return {true, std::nullopt};  // constant and short of the target
    Rat beta = -chi / p.hi;
    return {false, strict ? Int(floor_rat(beta) + 1) : ceil_rat(beta)};
}

/// Constrains the integer range [lo, hi] of v under the requirement that
/// s * (c + v*p) can still reach > 0 (strict) or >= 0 (closed), where the
/// achievable value ranges over the boxes c and p. Only sign-definite p
/// yields a bound; a straddling p constrains nothing. Returns false when the
/// range empties. Sound: never discards a v for which the constraint is
/// satisfiable.
bool constrain_range(RationalInterval c, RationalInterval p, int s, bool strict, Int& lo, Int& hi) {
    if (s < 0) {
        c = -c;
        p = -p;
    }
    if (sign_of(p.lo) >= 0) {
        LowerBoundResult r = feasible_lower_bound(c.hi, p, strict);
        if (r.empty) return false;
        if (r.bound && *r.bound > lo) lo = *r.bound;
    } else if (sign_of(p.hi) <= 0) {
        // Reflect v -> -v to reuse the nondecreasing case.
        LowerBoundResult r = feasible_lower_bound(c.hi, -p, strict);
        if (r.empty) return false;
        if (r.bound) {
            Int ub = -*r.bound;
            if (ub < hi) hi = ub;
        }
    }
    return lo <= hi;
}

struct SearchContext {
    IntPolynomial f;
    std::size_t d;
    Int trace;
    bool strict;
    bool early_exit;
    std::uint64_t budget;
    RootIsolation iso;
    std::vector<int> fp_signs;                              // exact signs of f'(alpha_i)
    std::vector<std::vector<RationalInterval>> powers;      // powers[i][k] ~ alpha_i^k
    std::vector<std::pair<Int, Int>> ranges;                // per free coordinate
    std::vector<std::vector<RationalInterval>> suffix;      // suffix[i][j]: coords > j
    IntPolynomial fprime;

    SearchStats stats;
    std::vector<Int> current;                               // (t, v_1, ..., v_{d-1}) prefix
    std::vector<RationalInterval> part;                     // per root: enclosure of prefix value
    std::vector<std::vector<Int>>* members = nullptr;
    bool stop = false;

    void charge(std::uint64_t n = 1) {
        stats.nodes += n;
        if (stats.nodes + stats.leaves > budget) throw BudgetExceeded(budget, stats.nodes + stats.leaves);
    }

    bool leaf_sign_ok(std::size_t i) {
        const RationalInterval& val = part[i];
        int s = val.definite_sign();
        if (s == 0) {
            IntPolynomial g = IntPolynomial::from_coeffs(current);
            s = g.is_zero() ? 0 : sign_at_root(g, iso, i);
        }
        if (strict) return s == fp_signs[i];
        return s == 0 || s == fp_signs[i];
    }

    void dfs(std::size_t j) {
        // depth j chooses coordinate v_j (1-based free coordinate index)
        Int lo = ranges[j - 1].first, hi = ranges[j - 1].second;
        bool feasible = true;
        for (std::size_t i = 0; i < d && feasible; ++i)
            feasible = constrain_range(part[i] + suffix[i][j], powers[i][d - 1 - j], fp_signs[i], strict, lo, hi);
        if (!feasible) {
            ++stats.pruned;
            return;
        }
        for (Int v = lo; v <= hi && !stop; ++v) {
            charge();
            current.push_back(v);
            std::vector<RationalInterval> saved = part;
            for (std::size_t i = 0; i < d; ++i)
                part[i] = part[i] + scale(powers[i][d - 1 - j], Rat(v));
            if (j == d - 1) {
                ++stats.leaves;
                bool ok = true;
                for (std::size_t i = 0; i < d && ok; ++i) ok = leaf_sign_ok(i);
                if (ok) {
                    members->push_back(current);
                    if (early_exit) stop = true;
                }
            } else {
                bool live = true;
                for (std::size_t i = 0; i < d && live; ++i) {
                    RationalInterval reach = part[i] + suffix[i][j];
                    if (fp_signs[i] > 0) {
                        live = strict ? sign_of(reach.hi) > 0 : sign_of(reach.hi) >= 0;
                    } else {
                        live = strict ? sign_of(reach.lo) < 0 : sign_of(reach.lo) <= 0;
                    }
                }
                if (live) {
                    dfs(j + 1);
                } else {
                    ++stats.pruned;
                }
            }
            current.pop_back();
            part = std::move(saved);
        }
    }
};

SearchContext make_context(const IntPolynomial& f, const Int& t, bool strict, const EnumOptions& opts) {
    require_enumerable(f);
    if (t < 1) throw NonPositiveTrace("trace must be >= 1");
    SearchContext ctx;
    ctx.f = f;
    ctx.d = static_cast<std::size_t>(f.degree());
    ctx.trace = t;
    ctx.strict = strict;
    ctx.early_exit = false;
    ctx.budget = opts.node_budget;
    ctx.iso = isolate_roots(f);
    ctx.fprime = f.derivative();
    for (std::size_t i = 0; i < ctx.d; ++i) ctx.fp_signs.push_back(sign_at_root(ctx.fprime, ctx.iso, i));

    // Box precision is adaptive: refine until the integer candidate sets stop
    // changing between two successive refinements (the box is only a filter;
    // acceptance at the leaves is exact either way).
    Rat eps = dyadic_eps(opts.precision_bits);
    SimplexBox box = vertex_boxes(f, t, eps);
    for (int round = 0; round < 5; ++round) {
        SimplexBox finer = vertex_boxes(f, t, eps / 256);
        bool same = true;
        for (std::size_t j = 0; j + 1 < ctx.d && same; ++j)
            same = box.integer_range(j) == finer.integer_range(j);
        box = std::move(finer);
        eps /= 256;
        if (same) break;
    }
    for (std::size_t j = 0; j + 1 < ctx.d; ++j) ctx.ranges.push_back(box.integer_range(j));

    unsigned long bits = opts.precision_bits;
    ctx.powers.resize(ctx.d);
    for (std::size_t i = 0; i < ctx.d; ++i) {
        RationalInterval r = refine_root(ctx.iso, i, dyadic_eps(bits));
        ctx.powers[i].reserve(ctx.d);
        for (std::size_t k = 0; k < ctx.d; ++k) ctx.powers[i].push_back(pow_interval(r, k));
    }
    // suffix[i][j] encloses sum_{u > j} v_u alpha_i^(d-1-u) over the box.
    ctx.suffix.assign(ctx.d, std::vector<RationalInterval>(ctx.d));
    for (std::size_t i = 0; i < ctx.d; ++i) {
        ctx.suffix[i][ctx.d - 1] = RationalInterval::point(Rat(0));
        for (std::size_t j = ctx.d - 1; j >= 1; --j) {
            RationalInterval coord(Rat(ctx.ranges[j - 1].first), Rat(ctx.ranges[j - 1].second));
            ctx.suffix[i][j - 1] = ctx.suffix[i][j] + coord * ctx.powers[i][ctx.d - 1 - j];
        }
    }
    ctx.current.push_back(t);
    ctx.part.assign(ctx.d, RationalInterval::point(Rat(0)));
    for (std::size_t i = 0; i < ctx.d; ++i) ctx.part[i] = scale(ctx.powers[i][ctx.d - 1], Rat(t));
    return ctx;
}

InterlacerSet run_search(const IntPolynomial& f, const Int& t, bool strict, bool early_exit, const EnumOptions& opts) {
    SearchContext ctx = make_context(f, t, strict, opts);
    ctx.early_exit = early_exit;
    InterlacerSet out;
    out.poly = f;
    out.trace_scale = t;
    ctx.members = &out.members;
    if (ctx.d >= 2) ctx.dfs(1);
    out.stats = ctx.stats;
    out.complete = !ctx.stop;
    if (out.complete && opts.with_certificates) {
        out.certificates.reserve(out.members.size());
        for (const auto& v : out.members) out.certificates.push_back(lambda_of(f, IntPolynomial::from_coeffs(v)));
    }
    return out;
}

}  // namespace

bool interlaces(const IntPolynomial& f, const IntPolynomial& g) {
    require_enumerable(f);
    if (g.is_zero() || g.degree() != f.degree() - 1) throw DegreeMismatch("deg g must equal deg f - 1");
    if (!g.is_monic()) throw NotMonic("interlacing polynomials are monic");
    RootIsolation iso = isolate_roots(f);
    IntPolynomial fp = f.derivative();
    std::size_t d = static_cast<std::size_t>(f.degree());
    for (std::size_t i = 0; i < d; ++i)
        if (sign_at_root(g, iso, i) != sign_at_root(fp, iso, i)) return false;
    return true;
}

InterlacerSet enumerate_interlacers(const IntPolynomial& f, const EnumOptions& opts) {
    return run_search(f, Int(1), /*strict=*/true, /*early_exit=*/false, opts);
}

InterlacerSet enumerate_trace_t(const IntPolynomial& f, const Int& t, const EnumOptions& opts) {
    return run_search(f, t, /*strict=*/true, /*early_exit=*/false, opts);
}

std::uint64_t count_trace_t(const IntPolynomial& f, const Int& t, const EnumOptions& opts) {
    EnumOptions o = opts;
    o.with_certificates = false;
    return enumerate_trace_t(f, t, o).count();
}

bool has_interlacer(const IntPolynomial& f, const EnumOptions& opts) {
    EnumOptions o = opts;
    o.with_certificates = false;
    return run_search(f, Int(1), true, /*early_exit=*/true, o).count() > 0;
}

NonInterlacingCertificate certify_non_interlacing(const IntPolynomial& f, const EnumOptions& opts) {
    EnumOptions o = opts;
    o.with_certificates = false;
    InterlacerSet set = enumerate_interlacers(f, o);
    if (!set.members.empty()) throw InterlacerExists(IntPolynomial::from_coeffs(set.members.front()));
    NonInterlacingCertificate cert;
    cert.poly = f;
    cert.boxes_scanned = set.stats.nodes;
    cert.candidates_rejected = set.stats.leaves;
    return cert;
}

std::uint64_t count_k_lattice_points(const IntPolynomial& f, const Int& t, const EnumOptions& opts) {
    EnumOptions o = opts;
    o.with_certificates = false;
    return run_search(f, t, /*strict=*/false, /*early_exit=*/false, o).count();
}

}  // namespace interlace
