#include "frobres/frob.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace frobres {

namespace {

mpz_class mod(const mpz_class& a, const mpz_class& p) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

mpz_class eval_gamma_mod(const IntPoly& g, const mpz_class& x, const mpz_class& p) {
    mpz_class r = 0;
    for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) r = mod(r * x + *it, p);
    return r;
}

mpz_class power_sum_trace(const GammaTable& t, const mpz_class& p, const std::vector<int>& exps) {
    ModPoly fp = ModPoly::reduce(t.f, p);
    ModPoly hp = ModPoly::reduce(t.h, p).rem(fp);
    mpz_class total = 0;
    for (int k : exps) {
        mpz_class e;
        mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
        ModPoly xe = powmod_x(fp, e);
        ModPoly g = (hp * xe).rem(fp);
        total += trace_of(g, fp);
    }
    return mod(total, p);
}

} // namespace

FrobReport classify(const GammaTable& t, const mpz_class& p) {
    FrobReport rep;
    rep.p = p;
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw BadInputError("classify: " + p.get_str() + " is not prime");

    if (mpz_divisible_p(t.disc.get_mpz_t(), p.get_mpz_t())) {
        rep.good = false;
        rep.bad_reason = "divides disc(f); ramified, requires p-adic method";
        return rep;
    }
    if (t.is_bad_prime(p)) {
        rep.good = false;
        rep.bad_reason = "divides resultant data";
        return rep;
    }

    ModPoly fp = ModPoly::reduce(t.f, p);
    DegreeProfile prof;
    try {
        prof = distinct_degree_profile(fp);
    } catch (const MathError&) {
        rep.good = false;
        rep.bad_reason = "f not squarefree mod p";
        return rep;
    }
    rep.cycle_type = prof.partition();

    std::vector<const GammaClassEntry*> candidates;
    for (const auto& c : t.classes)
        if (c.cycle_type == rep.cycle_type) candidates.push_back(&c);
    if (candidates.empty())
        throw MathError("table inconsistency: no class has cycle type of p=" + p.get_str());

    rep.good = true;
    if (candidates.size() == 1) {
        rep.class_label = candidates[0]->label;
        rep.gammas_vanishing = 0;
        return rep;
    }

    const std::vector<int>& exps = candidates[0]->symmetry_exponents;
    for (const auto* c : candidates)
        if (c->symmetry_exponents != exps)
            throw MathError("table inconsistency: mixed symmetry exponents within one cycle type");

    mpz_class T = power_sum_trace(t, p, exps);
    rep.trace = T;

    const GammaClassEntry* hit = nullptr;
    int vanishing = 0;
    for (const auto* c : candidates) {
        if (eval_gamma_mod(c->gamma, T, p) == 0) {
            ++vanishing;
            hit = c;
        }
    }
    if (vanishing != 1)
        throw MathError("table inconsistency: " + std::to_string(vanishing) +
                        " resolvents vanish at p=" + p.get_str());
    rep.gammas_vanishing = vanishing;
    rep.class_label = hit->label;
    return rep;
}

std::vector<mpz_class> primes_in_range(const mpz_class& lo, const mpz_class& hi) {
    if (lo > hi) return {};
    std::vector<mpz_class> out;
    mpz_class p = lo - 1;
    if (p < 1) p = 1;
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p > hi) break;
        out.push_back(p);
    }
    return out;
}

std::vector<FrobReport> classify_range_serial(const GammaTable& t, const mpz_class& lo, const mpz_class& hi) {
    std::vector<FrobReport> out;
    for (const auto& p : primes_in_range(lo, hi)) out.push_back(classify(t, p));
    return out;
}

std::vector<FrobReport> classify_range(const GammaTable& t, const mpz_class& lo, const mpz_class& hi,
                                       int workers) {
    std::vector<mpz_class> ps = primes_in_range(lo, hi);
    std::vector<FrobReport> out(ps.size());
    std::string error;
    const int np = static_cast<int>(ps.size());
#ifdef _OPENMP
    int threads = workers > 0 ? workers : omp_get_max_threads();
#else
    int threads = 1;
    (void)workers;
#endif
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (int i = 0; i < np; ++i) {
        try {
            out[i] = classify(t, ps[i]);
        } catch (const std::exception& e) {
#pragma omp critical
            if (error.empty()) error = e.what();
        }
    }
    if (!error.empty()) throw MathError(error);
    return out;
}

namespace {

using Matrix = std::vector<std::vector<mpz_class>>;

Matrix mat_mul(const Matrix& a, const Matrix& b, const mpz_class& p) {
    size_t n = a.size();
    Matrix c(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    for (auto& row : c)
        for (auto& x : row) x = mod(x, p);
    return c;
}

Matrix mat_identity(size_t n) {
    Matrix m(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix mat_pow(Matrix base, const mpz_class& e, const mpz_class& p) {
    Matrix r = mat_identity(base.size());
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = mat_mul(r, r, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mat_mul(r, base, p);
    }
    return r;
}

} // namespace

mpz_class companion_trace(const IntPoly& f, const IntPoly& h, const mpz_class& p,
                          const std::vector<int>& exponents) {
    int n = f.degree();
    Matrix m(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) m[i][n - 1] = mod(-f[i], p);
    for (int i = 1; i < n; ++i) m[i][i - 1] = 1;

    // h(M) by Horner
    Matrix hm(n, std::vector<mpz_class>(n, 0));
    for (auto it = h.coeffs().rbegin(); it != h.coeffs().rend(); ++it) {
        hm = mat_mul(hm, m, p);
        for (int i = 0; i < n; ++i) hm[i][i] = mod(hm[i][i] + *it, p);
    }

    mpz_class total = 0;
    for (int k : exponents) {
        mpz_class e;
        mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
        Matrix mk = mat_pow(m, e, p);
        Matrix prod = mat_mul(hm, mk, p);
        for (int i = 0; i < n; ++i) total += prod[i][i];
    }
    return mod(total, p);
}

DegreeProfile matrix_degree_profile(const IntPoly& f, const mpz_class& p) {
    int n = f.degree();
    Matrix m(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) m[i][n - 1] = mod(-f[i], p);
    for (int i = 1; i < n; ++i) m[i][i - 1] = 1;
    ModPoly fp = ModPoly::reduce(f, p);

    DegreeProfile prof;
    Matrix a = m;
    std::vector<int> gdeg(n + 1, 0);
    for (int d = 1; d <= n; ++d) {
        a = mat_pow(a, p, p); // now M^(p^d)
        std::vector<mpz_class> col(n);
        for (int i = 0; i < n; ++i) col[i] = a[i][0]; // coefficients of x^(p^d) mod f
        ModPoly xpd(std::move(col), p);
        ModPoly g = gcd_mod(fp, xpd - ModPoly::x(p));
        gdeg[d] = std::max(g.degree(), 0);
        // deg gcd = sum over e | d of e * m_e
        int known = 0;
        for (const auto& [e, me] : prof.counts)
            if (d % e == 0) known += e * me;
        int rest = gdeg[d] - known;
        if (rest < 0 || rest % d != 0) throw MathError("matrix_degree_profile: inconsistent gcd degrees");
        if (rest > 0) prof.counts[d] = rest / d;
    }
    return prof;
}

std::vector<ChebotarevRow> chebotarev_check(const std::vector<FrobReport>& reports, const GammaTable& t) {
    long n_good = 0;
    std::map<std::string, long> counts;
    for (const auto& r : reports) {
        if (!r.good) continue;
        ++n_good;
        ++counts[r.class_label];
    }
    std::vector<ChebotarevRow> rows;
    for (const auto& c : t.classes) {
        ChebotarevRow row;
        row.label = c.label;
        row.observed = counts.count(c.label) ? counts[c.label] : 0;
        row.expected = static_cast<double>(c.size) / static_cast<double>(t.group_order);
        row.frequency = n_good > 0 ? static_cast<double>(row.observed) / n_good : 0.0;
        double var = n_good * row.expected * (1.0 - row.expected);
        if (n_good >= 2 && var > 0) {
            row.zscore = (row.observed - n_good * row.expected) / std::sqrt(var);
            row.zscore_valid = true;
        }
        rows.push_back(row);
    }
    return rows;
}

std::string report_to_json_line(const FrobReport& r) {
    nlohmann::json j;
    j["p"] = r.p.get_str();
    j["status"] = r.good ? "good" : "bad";
    if (r.good) {
        j["cycle_type"] = r.cycle_type;
        j["class"] = r.class_label;
        j["gammas_vanishing"] = r.gammas_vanishing;
        if (r.trace) j["trace"] = r.trace->get_str();
    } else {
        j["reason"] = r.bad_reason;
    }
    return j.dump();
}

} // namespace frobres
