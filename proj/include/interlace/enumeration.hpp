#ifndef INTERLACE_ENUMERATION_HPP
#define INTERLACE_ENUMERATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "interlace/geometry.hpp"
#include "interlace/polynomial.hpp"

namespace interlace {

struct SearchStats {
    std::uint64_t nodes = 0;    ///< candidate coordinates visited
    std::uint64_t leaves = 0;   ///< full vectors tested exactly
    std::uint64_t pruned = 0;   ///< subtrees cut by interval feasibility
};

struct EnumOptions {
    std::uint64_t node_budget = 100'000'000;
    unsigned long precision_bits = 20;
    bool with_certificates = true;
};

/// Result of an exhaustive interlacer enumeration. Members are the full
/// coefficient vectors (t, b_1, ..., b_{d-1}) in lexicographic order; the
/// corresponding polynomials are sum_j v_j x^(d-1-j).
struct InterlacerSet {
    IntPolynomial poly;
    Int trace_scale;
    std::vector<std::vector<Int>> members;
    std::vector<LambdaVector> certificates;  // aligned with members when requested
    SearchStats stats;
    bool complete = false;

    std::size_t count() const { return members.size(); }
    std::vector<IntPolynomial> member_polynomials() const;
};

/// Witness that an exhaustive scan covered the entire certified bounding box
/// and found nothing.
struct NonInterlacingCertificate {
    IntPolynomial poly;
    std::uint64_t boxes_scanned = 0;
    std::uint64_t candidates_rejected = 0;
};

/// Thrown by certify_non_interlacing when a witness exists.
class InterlacerExists : public Error {
public:
    explicit InterlacerExists(IntPolynomial w)
        : Error("InterlacerExists", "witness " + w.to_string()), witness(std::move(w)) {}
    IntPolynomial witness;
};

/// Thrown when every trace level up to t_max is empty.
class NoElementUpToTMax : public Error {
public:
    explicit NoElementUpToTMax(std::vector<std::uint64_t> counts)
        : Error("NoElementUpToTMax", "no totally positive element up to trace " + std::to_string(counts.size())),
          per_level_counts(std::move(counts)) {}
    std::vector<std::uint64_t> per_level_counts;
};

/// Definition test: g monic of degree d-1 with roots strictly separating the
/// roots of f. Decided exactly as sign(g(alpha_i)) == sign(f'(alpha_i)) for
/// every root (all lambda_i > 0); a vanishing resultant shows up as a zero
/// sign and fails the test.
bool interlaces(const IntPolynomial& f, const IntPolynomial& g);

/// Exhaustive: every integer point in the interior of K(f) is found. Throws
/// BudgetExceeded rather than returning a truncated result.
InterlacerSet enumerate_interlacers(const IntPolynomial& f, const EnumOptions& opts = {});

/// Integer vectors (t, b_1, ..., b_{d-1}) with all lambda_i > 0; t = 1 agrees
/// with enumerate_interlacers.
InterlacerSet enumerate_trace_t(const IntPolynomial& f, const Int& t, const EnumOptions& opts = {});

std::uint64_t count_trace_t(const IntPolynomial& f, const Int& t, const EnumOptions& opts = {});

/// Stops at the first member found (no completeness claim).
bool has_interlacer(const IntPolynomial& f, const EnumOptions& opts = {});

/// Certificate iff the exhaustive scan finds zero interlacers; throws
/// InterlacerExists with the first witness otherwise.
NonInterlacingCertificate certify_non_interlacing(const IntPolynomial& f, const EnumOptions& opts = {});

/// Integer points of the closed simplex t*K(f) via the same certified search
/// (boundary included); used by the polytope point-count cross-checks.
std::uint64_t count_k_lattice_points(const IntPolynomial& f, const Int& t = Int(1), const EnumOptions& opts = {});

}  // namespace interlace

#endif
