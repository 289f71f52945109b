#ifndef FROBRES_PERM_GROUP_HPP
#define FROBRES_PERM_GROUP_HPP

#include <map>
#include <string>
#include <vector>

#include "frobres/permutation.hpp"

namespace frobres {

inline constexpr long kDefaultGroupCap = 200000;

/// A finite permutation group materialized as its full element list
/// (lexicographically sorted, hence deterministic). Immutable once built.
struct PermGroup {
    int n = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;

    long order() const { return static_cast<long>(elements.size()); }
};

/// Conjugacy class; representative is the lexicographically least member and
/// names the class through its cycle string.
struct ConjClass {
    Permutation representative;
    long size = 0;
    std::vector<int> cycle_type;
    std::vector<Permutation> members;
    int order = 1;

    std::string label() const { return representative.cycle_string(); }
};

/// For one (element order, cycle type) family: the largest subgroup H of
/// (Z/oZ)^x whose power maps g -> g^k stabilize every class of the family.
struct SymmetryGroup {
    int order = 1;
    std::vector<int> cycle_type;
    std::vector<int> exponents; // sorted, always contains 1
};

/// BFS closure of the generators. Throws ResourceCapError when |G| would
/// exceed cap, BadInputError on degree mismatch.
PermGroup closure(int n, const std::vector<Permutation>& generators, long cap = kDefaultGroupCap);

/// All conjugacy classes, ordered by (element order, cycle type, representative).
std::vector<ConjClass> conjugacy_classes(const PermGroup& g);

/// Map each class index to the class index of { g^k : g in C }. Verifies the
/// image is representative-independent.
std::vector<int> power_class_map(const PermGroup& g, const std::vector<ConjClass>& classes, long k);

/// One SymmetryGroup per (order, cycle type) family, in class order.
std::vector<SymmetryGroup> detect_symmetries(const PermGroup& g, const std::vector<ConjClass>& classes);

/// Parse ";"-separated generator strings, e.g. "(1,2,3,4,5);(2,5)(3,4)".
std::vector<Permutation> parse_generators(const std::string& s, int n);

} // namespace frobres

#endif
