#include "frobres/gamma.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "json.hpp"

namespace frobres {

const GammaClassEntry* GammaTable::find_class(const std::string& label) const {
    for (const auto& c : classes)
        if (c.label == label) return &c;
    return nullptr;
}

bool GammaTable::is_bad_prime(const mpz_class& p) const {
    for (const auto& e : bad_entries)
        if (mpz_divisible_p(e.get_mpz_t(), p.get_mpz_t())) return true;
    return false;
}

namespace {

enum class RoundStatus { ok, escalate, inconsistent };

BigComplex eval_int_poly(const IntPoly& h, const BigComplex& z) {
    BigComplex acc(z.prec());
    for (auto it = h.coeffs().rbegin(); it != h.coeffs().rend(); ++it)
        acc = cadd(cmul(acc, z), BigComplex::exact(*it, z.prec()));
    if (h.is_zero()) return BigComplex(z.prec());
    return acc;
}

// Ascending coefficients of prod (X - v).
std::vector<BigComplex> product_of_linear(const std::vector<BigComplex>& vals, mpfr_prec_t prec) {
    std::vector<BigComplex> c{BigComplex::exact(1, prec)};
    const BigComplex zero(prec);
    for (const auto& v : vals) {
        c.emplace_back(prec);
        for (size_t i = c.size() - 1; i > 0; --i) c[i] = csub(c[i - 1], cmul(v, c[i]));
        c[0] = csub(zero, cmul(v, c[0]));
    }
    return c;
}

struct Rounded {
    RoundStatus status = RoundStatus::ok;
    IntPoly poly;
};

Rounded round_coefficients(const std::vector<BigComplex>& coeffs) {
    mpfr_prec_t prec = coeffs.front().prec();
    BigFloat threshold = BigFloat::pow2(-32, prec);
    BigFloat window_limit = BigFloat::pow2(-33, prec);
    std::vector<mpz_class> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        mpz_class m = c.re.round_nearest();
        BigFloat residual = std::max((c.re - BigFloat::of(m, prec)).abs(), c.im.abs());
        if (!(residual < threshold)) {
            if (residual > c.err + threshold) return {RoundStatus::inconsistent, {}};
            return {RoundStatus::escalate, {}};
        }
        if (!(c.err < window_limit)) return {RoundStatus::escalate, {}};
        out.push_back(std::move(m));
    }
    return {RoundStatus::ok, IntPoly(std::move(out))};
}

void check_build_inputs(const IntPoly& f, const PermGroup& g, const RootSystem& rs) {
    if (!f.is_monic()) throw BadInputError("build_gamma: f must be monic (normalize rational input first)");
    if (!is_squarefree_over_q(f)) throw BadInputError("build_gamma: f must be squarefree");
    if (g.n != f.degree()) throw BadInputError("build_gamma: group degree does not match deg f");
    if (rs.n() != f.degree()) throw BadInputError("build_gamma: root system does not match deg f");
    if (rs.tag == RootSystem::Ordering::raw)
        throw BadInputError("build_gamma: root system must carry a canonical or user ordering");
}

// One class worth of linear-factor roots: either all member values, or the
// H-orbit representatives with power-summed images.
std::vector<BigComplex> class_values(const ConjClass& c, const std::vector<int>& exps,
                                     const std::vector<BigComplex>& hv, const RootSystem& rs) {
    mpfr_prec_t prec = rs.precision_bits;
    int n = rs.n();
    std::vector<BigComplex> vals;

    if (exps.size() <= 1) {
        vals.reserve(c.members.size());
        for (const auto& sigma : c.members) {
            BigComplex s(prec);
            for (int j = 0; j < n; ++j) s = cadd(s, cmul(hv[j], rs.roots[sigma(j)]));
            vals.push_back(std::move(s));
        }
        return vals;
    }

    // orbit representatives of C under sigma -> sigma^k, k in H
    std::set<std::vector<int>> seen;
    for (const auto& sigma : c.members) {
        if (seen.count(sigma.images())) continue;
        std::vector<Permutation> orbit;
        for (int k : exps) orbit.push_back(sigma.power(k));
        for (const auto& o : orbit) seen.insert(o.images());
        BigComplex s(prec);
        for (int j = 0; j < n; ++j) {
            BigComplex img(prec);
            for (const auto& o : orbit) img = cadd(img, rs.roots[o(j)]);
            s = cadd(s, cmul(hv[j], img));
        }
        vals.push_back(std::move(s));
    }
    return vals;
}

GammaTable build_common(const IntPoly& f, const PermGroup& g, const std::vector<ConjClass>& classes,
                        const std::vector<std::vector<int>>& exps_per_class, const IntPoly& h,
                        RootSystem& rs, const BuildOptions& opts) {
    check_build_inputs(f, g, rs);
    if (h.is_zero()) throw BadInputError("build_gamma: h must be nonzero");

    while (true) {
        mpfr_prec_t prec = rs.precision_bits;
        std::vector<BigComplex> hv;
        hv.reserve(rs.n());
        for (const auto& r : rs.roots) hv.push_back(eval_int_poly(h, r));

        std::vector<Rounded> done(classes.size());
        const int nc = static_cast<int>(classes.size());
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
        for (int ci = 0; ci < nc; ++ci) {
            std::vector<BigComplex> vals = class_values(classes[ci], exps_per_class[ci], hv, rs);
            done[ci] = round_coefficients(product_of_linear(vals, prec));
        }

        bool needs_more = false;
        for (const auto& r : done) {
            if (r.status == RoundStatus::inconsistent)
                throw MathError("group/ordering inconsistent with roots: resolvent coefficient is certified non-integral");
            if (r.status == RoundStatus::escalate) needs_more = true;
        }
        if (needs_more) {
            try {
                rs = escalate(f, rs, opts.precision_ceiling);
            } catch (const ResourceCapError&) {
                throw MathError("group/ordering inconsistent with roots: rounding residual too large at the precision ceiling");
            }
            continue;
        }

        GammaTable t;
        t.f = f;
        t.h = h;
        t.n = g.n;
        for (const auto& gen : g.generators) t.generators.push_back(gen.cycle_string());
        t.group_order = g.order();
        t.disc = discriminant(f);
        long degsum = 0;
        for (int ci = 0; ci < nc; ++ci) {
            GammaClassEntry e;
            e.label = classes[ci].label();
            e.cycle_type = classes[ci].cycle_type;
            e.size = classes[ci].size;
            e.gamma = done[ci].poly;
            e.symmetry_exponents = exps_per_class[ci];
            degsum += static_cast<long>(e.gamma.degree()) * static_cast<long>(e.symmetry_exponents.size());
            t.classes.push_back(std::move(e));
        }
        if (degsum != t.group_order)
            throw MathError("internal: resolvent degrees do not sum to the group order");
        return t;
    }
}

} // namespace

GammaTable build_gamma(const IntPoly& f, const PermGroup& g, const std::vector<ConjClass>& classes,
                       const IntPoly& h, RootSystem& rs, const BuildOptions& opts) {
    std::vector<std::vector<int>> exps(classes.size(), std::vector<int>{1});
    return build_common(f, g, classes, exps, h, rs, opts);
}

GammaTable build_gamma_reduced(const IntPoly& f, const PermGroup& g, const std::vector<ConjClass>& classes,
                               const std::vector<SymmetryGroup>& symmetries, const IntPoly& h,
                               RootSystem& rs, const BuildOptions& opts) {
    std::vector<std::vector<int>> exps(classes.size(), std::vector<int>{1});
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        for (const auto& sg : symmetries) {
            if (sg.order == classes[ci].order && sg.cycle_type == classes[ci].cycle_type &&
                sg.exponents.size() > 1) {
                exps[ci] = sg.exponents;
            }
        }
    }
    return build_common(f, g, classes, exps, h, rs, opts);
}

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 1000000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

void collect_factors(const mpz_class& value, std::set<mpz_class>& into) {
    mpz_class v = abs(value);
    if (v <= 1) return;
    for (unsigned long p : small_primes()) {
        if (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
            into.insert(mpz_class(p));
            do {
                mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
            } while (mpz_divisible_ui_p(v.get_mpz_t(), p));
        }
        if (v == 1) return;
        if (mpz_cmp_ui(v.get_mpz_t(), p * p) < 0) break; // remaining cofactor is prime
    }
    if (v > 1) into.insert(v); // prime, or a composite cofactor kept whole
}

} // namespace

void validate(GammaTable& t) {
    std::set<mpz_class> entries;
    if (t.disc == 0) throw MathError("validate: zero discriminant");
    for (size_t i = 0; i < t.classes.size(); ++i) {
        for (size_t j = i + 1; j < t.classes.size(); ++j) {
            if (t.classes[i].cycle_type != t.classes[j].cycle_type) continue;
            mpz_class r = resultant(t.classes[i].gamma, t.classes[j].gamma);
            if (r == 0)
                throw HUnsuitableError("h unsuitable: classes " + t.classes[i].label + " and " +
                                       t.classes[j].label + " have resolvents with a common factor");
            collect_factors(r, entries);
        }
    }
    collect_factors(t.disc, entries);
    t.bad_entries.assign(entries.begin(), entries.end());
}

GammaTable choose_h(const IntPoly& f, const PermGroup& g, const std::vector<ConjClass>& classes,
                    RootSystem& rs, const BuildOptions& opts) {
    int n = f.degree();
    std::vector<IntPoly> candidates = {
        IntPoly::monomial(1, 2), // x^2
        IntPoly::monomial(1, 3), // x^3
        IntPoly::monomial(1, 1), // x
    };
    std::mt19937_64 rng(0x66726f62726573ULL);
    // coefficients in [-9, 9]; mapped by hand so the sequence is identical on
    // every platform for a fixed seed
    auto coeff = [&rng]() { return static_cast<long>(rng() % 19) - 9; };
    while (candidates.size() < 32) {
        std::vector<mpz_class> cs(std::max(n, 2));
        for (auto& c : cs) c = coeff();
        IntPoly h(std::move(cs));
        if (h.degree() >= 1) candidates.push_back(std::move(h));
    }
    for (const auto& h : candidates) {
        GammaTable t = build_gamma(f, g, classes, h, rs, opts);
        try {
            validate(t);
            return t;
        } catch (const HUnsuitableError&) {
            // try the next candidate
        }
    }
    throw MathError("no suitable h found after 32 attempts; perturb f: replace f by the minimal "
                    "polynomial of B(a) for a root a of f and a small integer polynomial B, which "
                    "keeps the splitting field");
}

std::optional<mpz_class> sqrt_disc(const IntPoly& f, const PermGroup& g, RootSystem& rs,
                                   const BuildOptions& opts) {
    for (const auto& gen : g.generators)
        if (!gen.is_even()) return std::nullopt;
    mpz_class disc = discriminant(f);
    while (true) {
        mpfr_prec_t prec = rs.precision_bits;
        BigComplex prod = BigComplex::exact(1, prec);
        for (int i = 0; i < rs.n(); ++i)
            for (int j = i + 1; j < rs.n(); ++j) prod = cmul(prod, csub(rs.roots[i], rs.roots[j]));
        Rounded r = round_coefficients({prod});
        if (r.status == RoundStatus::ok) {
            mpz_class m = r.poly.is_zero() ? mpz_class(0) : r.poly[0];
            if (m * m == disc) return m;
            return std::nullopt;
        }
        if (r.status == RoundStatus::inconsistent) return std::nullopt;
        try {
            rs = escalate(f, rs, opts.precision_ceiling);
        } catch (const ResourceCapError&) {
            return std::nullopt;
        }
    }
}

// ---------------------------------------------------------------------------
// persistence

namespace {

using nlohmann::json;

json int_strings(const std::vector<mpz_class>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

json poly_strings(const IntPoly& p) { return int_strings(p.coeffs()); }

mpz_class parse_mpz(const json& j, const char* what) {
    if (!j.is_string()) throw BadInputError(std::string("table: ") + what + " must be a decimal string");
    try {
        return mpz_class(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
        throw BadInputError(std::string("table: bad integer in ") + what);
    }
}

IntPoly parse_poly(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw BadInputError(std::string("table: ") + what + " must be a non-empty array");
    std::vector<mpz_class> v;
    for (const auto& e : j) v.push_back(parse_mpz(e, what));
    return IntPoly(std::move(v));
}

} // namespace

std::string table_to_json(const GammaTable& t) {
    json j;
    j["format_version"] = t.format_version;
    j["f"] = poly_strings(t.f);
    j["h"] = poly_strings(t.h);
    j["group"] = {{"n", t.n}, {"generators", t.generators}, {"order", t.group_order}};
    json cls = json::array();
    for (const auto& c : t.classes) {
        json e;
        e["label"] = c.label;
        e["cycle_type"] = c.cycle_type;
        e["size"] = c.size;
        e["gamma"] = poly_strings(c.gamma);
        e["symmetry_exponents"] = c.symmetry_exponents;
        cls.push_back(std::move(e));
    }
    j["classes"] = std::move(cls);
    j["bad_primes"] = int_strings(t.bad_entries);
    j["disc"] = t.disc.get_str();
    if (t.disc_sqrt) j["disc_sqrt"] = t.disc_sqrt->get_str();
    return j.dump();
}

GammaTable table_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw BadInputError(std::string("table: invalid JSON: ") + e.what());
    }
    try {
        GammaTable t;
        t.format_version = j.at("format_version").get<int>();
        if (t.format_version != 1)
            throw BadInputError("table: unsupported format_version " + std::to_string(t.format_version));
        t.f = parse_poly(j.at("f"), "f");
        t.h = parse_poly(j.at("h"), "h");
        const json& grp = j.at("group");
        t.n = grp.at("n").get<int>();
        t.group_order = grp.at("order").get<long>();
        for (const auto& s : grp.at("generators")) t.generators.push_back(s.get<std::string>());
        for (const auto& e : j.at("classes")) {
            GammaClassEntry c;
            c.label = e.at("label").get<std::string>();
            c.cycle_type = e.at("cycle_type").get<std::vector<int>>();
            c.size = e.at("size").get<long>();
            c.gamma = parse_poly(e.at("gamma"), "gamma");
            c.symmetry_exponents = e.at("symmetry_exponents").get<std::vector<int>>();
            if (c.symmetry_exponents.empty()) throw BadInputError("table: empty symmetry_exponents");
            t.classes.push_back(std::move(c));
        }
        for (const auto& e : j.at("bad_primes")) t.bad_entries.push_back(parse_mpz(e, "bad_primes"));
        t.disc = parse_mpz(j.at("disc"), "disc");
        if (j.contains("disc_sqrt")) t.disc_sqrt = parse_mpz(j.at("disc_sqrt"), "disc_sqrt");

        // structural invariants
        if (!t.f.is_monic() || t.f.degree() != t.n) throw BadInputError("table: f must be monic of degree n");
        if (t.disc == 0) throw BadInputError("table: zero discriminant");
        if (t.classes.empty()) throw BadInputError("table: no classes");
        long degsum = 0, sizesum = 0;
        bool have_identity = false;
        for (const auto& c : t.classes) {
            if (c.gamma.is_zero()) throw BadInputError("table: zero resolvent");
            long hsz = static_cast<long>(c.symmetry_exponents.size());
            if (static_cast<long>(c.gamma.degree()) * hsz != c.size)
                throw BadInputError("table: resolvent degree inconsistent with class size");
            degsum += c.gamma.degree() * hsz;
            sizesum += c.size;
            std::vector<int> ones(static_cast<size_t>(t.n), 1);
            if (c.cycle_type == ones) {
                have_identity = true;
                if (c.gamma.degree() != 1) throw BadInputError("table: identity resolvent must be linear");
            }
        }
        if (degsum != t.group_order || sizesum != t.group_order)
            throw BadInputError("table: class sizes do not sum to the group order");
        if (!have_identity) throw BadInputError("table: identity class missing");
        return t;
    } catch (const json::exception& e) {
        throw BadInputError(std::string("table: schema error: ") + e.what());
    }
}

} // namespace frobres
