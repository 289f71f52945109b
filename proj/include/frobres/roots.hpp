#ifndef FROBRES_ROOTS_HPP
#define FROBRES_ROOTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "frobres/bigcomplex.hpp"
#include "frobres/int_poly.hpp"

namespace frobres {

inline constexpr long kPrecisionCeiling = 1048576;

/// 64 + 32n starting precision.
long default_start_bits(const IntPoly& f);

/*
 * Certified complex approximations of the roots of a squarefree integer
 * polynomial. Every entry is a disk (centre, err) containing exactly one
 * root; the disks are pairwise disjoint once certification succeeded.
 */
struct RootSystem {
    enum class Ordering { raw, canonical, user };

    std::vector<BigComplex> roots;
    long precision_bits = 0;
    Ordering tag = Ordering::raw;

    int n() const { return static_cast<int>(roots.size()); }
};

/// Aberth-Ehrlich simultaneous iteration plus inclusion-disk certification.
/// Returns roots in iteration order (tag raw). Throws BadInputError for
/// non-squarefree f, PrecisionEscalation when disks cannot be separated.
RootSystem find_roots(const IntPoly& f, long precision_bits);

/// Sort by (Re ascending, Im ascending). Component comparisons must be
/// certified by disk disjointness; an unresolvable tie throws
/// PrecisionEscalation.
RootSystem canonical_order(const RootSystem& rs);

/// Double the precision, restart the iteration from the previous roots, keep
/// the index assignment, and (for canonical systems) assert the ordering is
/// stable. Throws ResourceCapError past the ceiling.
RootSystem escalate(const IntPoly& f, const RootSystem& rs, long ceiling = kPrecisionCeiling);

/// find_roots + canonical_order with automatic escalation up to the ceiling.
RootSystem certified_roots(const IntPoly& f, long start_bits = 0, long ceiling = kPrecisionCeiling);

/// Reorder rs to match user-supplied "re,im" decimal approximations, one per
/// root. Each point must land in exactly one matching disk (err radius or
/// half the distance to the nearest other root, whichever is larger), and the
/// assignment must be a bijection. Throws BadInputError otherwise.
RootSystem user_order(const RootSystem& rs, const std::vector<std::pair<std::string, std::string>>& points);

} // namespace frobres

#endif
