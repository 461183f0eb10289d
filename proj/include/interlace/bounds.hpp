#ifndef INTERLACE_BOUNDS_HPP
#define INTERLACE_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "interlace/enumeration.hpp"
#include "interlace/interval.hpp"
#include "interlace/polynomial.hpp"

namespace interlace {

/// Per-dimension bound on the lattice kissing number. `Exact` entries are the
/// known maxima; `Upper` entries merely dominate the true value, which keeps
/// every "rank >= 2m / tau_d" style conclusion conservative.
struct KissingEntry {
    Int value;
    enum class Kind { Exact, Upper } kind = Kind::Exact;
    std::string source;
};

class KissingTable {
public:
    /// Line format: `d value kind source...`, kind in {exact, upper},
    /// '#' comments and blank lines allowed.
    static KissingTable load(const std::string& path);
    static KissingTable parse(const std::string& text);
    /// Table compiled into the library; data/kissing_numbers.txt ships the
    /// same content and a test keeps the two in sync.
    static KissingTable embedded_default();

    std::optional<KissingEntry> lookup(long d) const;
    const std::map<long, KissingEntry>& entries() const { return entries_; }

private:
    std::map<long, KissingEntry> entries_;
};

/// Rational enclosure of a bound value together with the implied minimal
/// integer rank under strictly-greater semantics ("the rank is larger than
/// the bound"). For irrational bounds the enclosure is refined until the
/// implied integer is unambiguous, so the rank is exact, never over-claimed.
struct BranchBound {
    Rat lo;
    Rat hi;
    long long implied_rank = 0;
    bool exact_rational = true;
};

enum class NonclassicalBranch { SqrtBranch, Over15d };

struct RankBoundReport {
    long degree = 0;
    long long m_count = 0;
    Rat classical_bound;            // m/d, rank strictly greater
    long long classical_rank = 0;   // smallest integer > classical_bound
    NonclassicalBranch branch = NonclassicalBranch::SqrtBranch;
    BranchBound nonclassical;       // value of the branch that fires
    bool diagonal_skipped = true;   // no kissing entry for this dimension
    std::optional<Rat> diagonal_bound;       // 2m / tau_d, rank >= bound
    std::optional<long long> diagonal_rank;  // ceil of the bound
    std::optional<KissingEntry::Kind> diagonal_kind;
    double asymptotic_value = 0.0;          // log(2m) / (0.401 d log 2), o(1) dropped
    long long asymptotic_rank = 0;          // ceil, heuristic only
    bool asymptotic_heuristic = true;
    bool o1_dropped = true;
};

/// All four rank lower bounds for a degree-d order with m totally positive
/// minimal-trace dual elements. Branch selection follows the displayed
/// conditions (d > 5 or m > 240) exactly.
RankBoundReport rank_bounds(long d, long long m, const KissingTable& table);

/// The square-root branch value (1 + sqrt(1+4m)) / (2d) on its own; this is
/// the bound whose growth in m is of square-root order.
BranchBound sqrt_branch_bound(long d, long long m);

/// Smallest integer strictly greater than x.
long long strictly_greater_rank(const Rat& x);
/// Smallest integer >= x.
long long at_least_rank(const Rat& x);

struct DobrowolskiReport {
    bool applicable = false;  // false when f is not interlaced
    bool holds = true;        // |Disc(f)| >= d^d; a violation contradicts the theory
    Int disc;
    Int threshold;  // d^d
    Int margin;     // |disc| - d^d when applicable
};

/// Discriminant criterion for an interlaced irreducible polynomial.
DobrowolskiReport dobrowolski_check(const IntPolynomial& f, bool interlaced, bool assert_irreducible = false);

struct GrowthRow {
    long long D = 0;
    long long m_formula = 0;  // 2*floor(sqrt(D)) + 1
    std::optional<long long> m_enumerated;
    Rat classical_bound;
    long long classical_rank = 0;
    BranchBound fourth_root_bound;  // sqrt-branch value; grows like D^(1/4)
    double ratio = 0.0;             // fourth-root rank / (4D)^(1/4)
    bool in_band = false;
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    bool all_in_band = true;
    bool enumeration_consistent = true;
    double band_lo = 0.3;
    double band_hi = 1.2;
};

/// Interlacer-count growth for x^2 - D across the list: the count follows the
/// closed quadratic formula (cross-checked by enumeration up to
/// `enum_verify_limit`), and the sqrt-branch rank divided by (4D)^(1/4) must
/// stay inside the fixed band. Throws SquareInput on square D.
GrowthReport quadratic_growth_check(const std::vector<long long>& Ds, long long enum_verify_limit = 500,
                                    const EnumOptions& opts = {});

}  // namespace interlace

#endif
