#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "sheafcalc/chern.hpp"

namespace sheafcalc {

// One node of the dyadic tree of exceptional-bundle slopes: slope alpha at
// index dy_p / 2^dy_q (lowest form), with its rank and discriminant.
// Construction hard-checks the numerical constraints; a table row that does
// not describe an exceptional bundle is a loud failure, never silent data.
struct ExceptionalSlope {
    Rat alpha;
    Int rank;  // grows super-exponentially with dyadic depth
    Rat disc;
    long dy_p;
    unsigned dy_q;

    ExceptionalSlope(Rat alpha_, Int rank_, Rat disc_, long dy_p_, unsigned dy_q_);

    ExceptionalSlope shifted(long n) const;  // tensor by O(n)

    // The full character (rank, rank*alpha, ch2 with Delta = disc);
    // overflows loudly when the rank exceeds machine range.
    CharP2 character() const;
};

// Slope of the exceptional bundle at dyadic index p/2^q. The index must be
// in lowest form (p odd when q >= 1). Integers are the line bundles; deeper
// nodes come from the two neighbours one level up via the mutation rule
//   gamma = (a + b)/2 + (Delta_b - Delta_a)/(3 + a - b).
ExceptionalSlope eps(long p, unsigned q);

struct TableFormatError : std::runtime_error {
    explicit TableFormatError(const std::string& what) : std::runtime_error(what) {}
};

// All exceptional slopes of dyadic depth <= q_max in the fundamental window
// [0, 1); everything else is an integer shift. Frozen after construction.
class ExceptionalTable {
public:
    static ExceptionalTable build(unsigned q_max);

    // Text round-trip. load throws TableFormatError on a bad or
    // version-mismatched header; row-level nonsense fails the
    // ExceptionalSlope constructor instead.
    static ExceptionalTable load(std::istream& in);
    void save(std::ostream& out) const;

    unsigned q_max() const { return q_max_; }
    const std::vector<ExceptionalSlope>& fundamental() const { return rows_; }

    // Indices of fundamental() in ascending rank order. A slope of rank r
    // contributes at most (1 + 1/r^2)/2 to the curve, so scans in this
    // order can stop as soon as that cap drops below the running maximum.
    const std::vector<std::size_t>& by_rank() const { return by_rank_; }

    // Exact lookup of a slope anywhere on the line.
    std::optional<ExceptionalSlope> find_slope(const Rat& alpha) const;

    // Slopes in [lo, hi], ascending.
    std::vector<ExceptionalSlope> window(const Rat& lo, const Rat& hi) const;

private:
    void finalize();

    unsigned q_max_ = 0;
    std::vector<ExceptionalSlope> rows_;  // ascending slopes in [0, 1)
    std::vector<std::size_t> by_rank_;
};

// Sorted, deduplicated slopes of depth <= q_max in [lo, hi].
std::vector<ExceptionalSlope> enumerate_exceptional(unsigned q_max, const Rat& lo, const Rat& hi);

// Process-wide table cache. Construction for a given depth happens once;
// concurrent requests serialize on the cache lock and share the result.
std::shared_ptr<const ExceptionalTable> shared_table(unsigned q_max);

// Directory for persisted tables (one file per depth, "exc-q<N>.tbl").
// Empty string keeps tables in memory only. Affects subsequent
// shared_table calls, not tables already built.
void set_table_store_dir(const std::string& dir);
std::string table_store_dir();

}  // namespace sheafcalc
