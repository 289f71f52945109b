#include "frobres/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "frobres/errors.hpp"

namespace frobres {

PermGroup closure(int n, const std::vector<Permutation>& generators, long cap) {
    if (cap < 1) throw BadInputError("group cap must be >= 1");
    for (const auto& g : generators)
        if (g.n() != n) throw BadInputError("generator degree does not match n");

    std::set<std::vector<int>> seen;
    std::vector<Permutation> frontier{Permutation::identity(n)};
    seen.insert(frontier[0].images());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : frontier) {
            for (const auto& g : generators) {
                Permutation y = g.compose(x);
                if (seen.insert(y.images()).second) {
                    if (static_cast<long>(seen.size()) > cap)
                        throw ResourceCapError("group too large: exceeds cap of " + std::to_string(cap));
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }

    PermGroup g;
    g.n = n;
    g.generators = generators;
    g.elements.reserve(seen.size());
    for (const auto& v : seen) g.elements.emplace_back(v);
    return g;
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& g) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < g.elements.size(); ++i) index[g.elements[i].images()] = static_cast<int>(i);

    std::vector<bool> assigned(g.elements.size(), false);
    std::vector<ConjClass> classes;
    for (size_t i = 0; i < g.elements.size(); ++i) {
        if (assigned[i]) continue;
        // conjugation orbit under the generators (their closure is all of G)
        std::set<std::vector<int>> orbit;
        std::vector<Permutation> frontier{g.elements[i]};
        orbit.insert(g.elements[i].images());
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& x : frontier) {
                for (const auto& t : g.generators) {
                    Permutation y = t.compose(x).compose(t.inverse());
                    if (orbit.insert(y.images()).second) next.push_back(std::move(y));
                }
            }
            frontier = std::move(next);
        }
        ConjClass c;
        for (const auto& v : orbit) {
            int idx = index.at(v);
            assigned[idx] = true;
            c.members.emplace_back(v);
        }
        c.representative = c.members.front(); // orbit set is lex-sorted
        c.size = static_cast<long>(c.members.size());
        c.cycle_type = c.representative.cycle_type();
        c.order = c.representative.order();
        classes.push_back(std::move(c));
    }

    std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
        if (a.order != b.order) return a.order < b.order;
        if (a.cycle_type != b.cycle_type) return a.cycle_type < b.cycle_type;
        return a.representative < b.representative;
    });
    return classes;
}

std::vector<int> power_class_map(const PermGroup& g, const std::vector<ConjClass>& classes, long k) {
    if (k < 0) throw BadInputError("power_class_map: k must be >= 0");
    std::map<std::vector<int>, int> cls_of;
    for (size_t ci = 0; ci < classes.size(); ++ci)
        for (const auto& m : classes[ci].members) cls_of[m.images()] = static_cast<int>(ci);

    std::vector<int> out(classes.size());
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        int target = -1;
        for (const auto& m : classes[ci].members) {
            int t = cls_of.at(m.power(k).images());
            if (target == -1)
                target = t;
            else if (t != target)
                throw MathError("power_class_map: image depends on the representative");
        }
        out[ci] = target;
    }
    (void)g;
    return out;
}

std::vector<SymmetryGroup> detect_symmetries(const PermGroup& g, const std::vector<ConjClass>& classes) {
    std::map<std::vector<int>, int> cls_of;
    for (size_t ci = 0; ci < classes.size(); ++ci)
        for (const auto& m : classes[ci].members) cls_of[m.images()] = static_cast<int>(ci);

    // families keyed by (order, cycle type), kept in first-appearance order
    std::vector<std::pair<int, std::vector<int>>> keys;
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> family;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        auto key = std::make_pair(classes[ci].order, classes[ci].cycle_type);
        if (family.find(key) == family.end()) keys.push_back(key);
        family[key].push_back(static_cast<int>(ci));
    }

    std::vector<SymmetryGroup> out;
    for (const auto& key : keys) {
        const auto& [o, type] = key;
        SymmetryGroup sg;
        sg.order = o;
        sg.cycle_type = type;
        for (int k = 1; k < std::max(o, 2); ++k) {
            if (std::gcd(k, o) != 1) continue;
            bool stabilizes = true;
            for (int ci : family[key]) {
                for (const auto& m : classes[ci].members) {
                    if (cls_of.at(m.power(k).images()) != ci) {
                        stabilizes = false;
                        break;
                    }
                }
                if (!stabilizes) break;
            }
            if (stabilizes) sg.exponents.push_back(k);
        }
        if (sg.exponents.empty()) sg.exponents.push_back(1);
        out.push_back(std::move(sg));
    }
    (void)g;
    return out;
}

std::vector<Permutation> parse_generators(const std::string& s, int n) {
    std::vector<Permutation> gens;
    std::string cur;
    auto flush = [&]() {
        bool blank = true;
        for (char c : cur)
            if (!isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) gens.push_back(Permutation::parse(cur, n));
        cur.clear();
    };
    for (char c : s) {
        if (c == ';')
            flush();
        else
            cur.push_back(c);
    }
    flush();
    return gens;
}

} // namespace frobres
