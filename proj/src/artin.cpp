#include "frobres/artin.hpp"

#include "json.hpp"

namespace frobres {

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw BadInputError("empty rational value");
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    try {
        if (t.find('/') != std::string::npos) {
            mpq_class q(t, 10);
            q.canonicalize();
            return q;
        }
        size_t dot = t.find('.');
        if (dot == std::string::npos) return mpq_class(mpz_class(t, 10));
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        size_t frac_len = t.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw BadInputError("bad rational \"" + s + "\"");
        mpz_class num(digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw BadInputError("bad rational \"" + s + "\"");
    }
}

const GaussianRational& CharacterTable::at(const std::string& label) const {
    auto it = values.find(label);
    if (it == values.end()) throw BadInputError("character has no value for class " + label);
    return it->second;
}

CharacterTable character_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw BadInputError(std::string("character file: invalid JSON: ") + e.what());
    }
    try {
        CharacterTable chi;
        chi.dimension = j.at("dimension").get<int>();
        if (chi.dimension < 1) throw BadInputError("character dimension must be >= 1");
        for (const auto& [label, val] : j.at("values").items()) {
            if (!val.is_array() || val.size() != 2)
                throw BadInputError("character value for " + label + " must be [re, im]");
            chi.values[label] = {parse_rational(val[0].get<std::string>()),
                                 parse_rational(val[1].get<std::string>())};
        }
        return chi;
    } catch (const nlohmann::json::exception& e) {
        throw BadInputError(std::string("character file: schema error: ") + e.what());
    }
}

namespace {

mpq_class round_to_nearest(const mpq_class& q) {
    mpz_class num = q.get_num() * 2 + q.get_den();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), mpz_class(q.get_den() * 2).get_mpz_t());
    return {fl};
}

mpq_class snap(const mpq_class& q) {
    static const mpq_class eps(mpz_class(1), mpz_class("100000000000000000000")); // 1e-20
    mpq_class nearest = round_to_nearest(q);
    return abs(q - nearest) < eps ? nearest : q;
}

GaussianRational snap(const GaussianRational& v) { return {snap(v.re), snap(v.im)}; }

} // namespace

std::vector<GaussianRational> euler_factor(const CharacterTable& chi, const std::string& class_label,
                                           const std::function<std::string(int)>& class_of_power) {
    int d = chi.dimension;
    // p_k = chi(g^k); e_k = (1/k) sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
    std::vector<GaussianRational> pk(d + 1), ek(d + 1);
    ek[0] = GaussianRational::integer(1);
    for (int k = 1; k <= d; ++k) pk[k] = chi.at(class_of_power(k));
    (void)class_label;
    for (int k = 1; k <= d; ++k) {
        GaussianRational acc;
        for (int i = 1; i <= k; ++i) {
            GaussianRational term = ek[k - i] * pk[i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        mpq_class inv_k(1, k);
        ek[k] = snap(GaussianRational{acc.re * inv_k, acc.im * inv_k});
    }
    std::vector<GaussianRational> coeffs(d + 1);
    for (int k = 0; k <= d; ++k) coeffs[k] = (k % 2 == 0) ? ek[k] : -ek[k];
    return coeffs;
}

PowerClassLookup::PowerClassLookup(const GammaTable& t, int k_max) {
    std::vector<Permutation> gens;
    for (const auto& s : t.generators) gens.push_back(Permutation::parse(s, t.n));
    PermGroup g = closure(t.n, gens);
    if (g.order() != t.group_order) throw MathError("table generators do not close to the stored order");
    std::vector<ConjClass> classes = conjugacy_classes(g);
    if (classes.size() != t.classes.size()) throw MathError("table classes do not match the generators");
    for (size_t i = 0; i < classes.size(); ++i) {
        labels_.push_back(classes[i].label());
        index_[labels_.back()] = static_cast<int>(i);
        if (!t.find_class(labels_.back()))
            throw MathError("table classes do not match the generators (label " + labels_.back() + ")");
    }
    maps_.resize(k_max + 1);
    for (int k = 0; k <= k_max; ++k) maps_[k] = power_class_map(g, classes, k);
}

std::string PowerClassLookup::class_of_power(const std::string& label, int k) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw BadInputError("unknown class label " + label);
    if (k < 0 || k >= static_cast<int>(maps_.size())) throw BadInputError("power map out of range");
    return labels_[maps_[k][it->second]];
}

std::vector<GaussianRational> dirichlet_coefficients(
    const GammaTable& t, const CharacterTable& chi, const std::vector<FrobReport>& reports, long n_max,
    const std::map<mpz_class, std::vector<GaussianRational>>* ramified_factors) {
    if (n_max < 1) throw BadInputError("dirichlet_coefficients: N must be >= 1");
    PowerClassLookup lookup(t, chi.dimension);

    std::map<long, const FrobReport*> by_prime;
    for (const auto& r : reports)
        if (r.p <= n_max) by_prime[static_cast<long>(r.p.get_si())] = &r;

    // smallest prime factor sieve
    std::vector<long> spf(n_max + 1, 0);
    for (long i = 2; i <= n_max; ++i) {
        if (spf[i]) continue;
        for (long j = i; j <= n_max; j += i)
            if (!spf[j]) spf[j] = i;
    }

    // per-prime expansion coefficients of 1/P_p(T)
    std::map<long, std::vector<GaussianRational>> inv;
    for (long p = 2; p <= n_max; ++p) {
        if (spf[p] != p) continue;
        auto it = by_prime.find(p);
        if (it == by_prime.end())
            throw BadInputError("missing classification for prime " + std::to_string(p) +
                                " <= N; classify the full range first");
        const FrobReport& rep = *it->second;
        std::vector<GaussianRational> factor;
        if (rep.good) {
            factor = euler_factor(chi, rep.class_label, [&](int k) {
                return lookup.class_of_power(rep.class_label, k);
            });
        } else if (ramified_factors && ramified_factors->count(rep.p)) {
            factor = ramified_factors->at(rep.p);
            if (factor.empty() || !(factor[0] == GaussianRational::integer(1)))
                throw BadInputError("ramified factor for p=" + rep.p.get_str() + " must have constant term 1");
        } else {
            factor = {GaussianRational::integer(1)}; // omitted local factor
        }
        int kmax = 1;
        for (long pk = p; pk <= n_max / p; pk *= p) ++kmax;
        std::vector<GaussianRational> c(kmax + 1);
        c[0] = GaussianRational::integer(1);
        for (int k = 1; k <= kmax; ++k) {
            GaussianRational acc;
            for (int i = 1; i <= std::min<int>(k, static_cast<int>(factor.size()) - 1); ++i)
                acc = acc + factor[i] * c[k - i];
            c[k] = -acc;
        }
        inv[p] = std::move(c);
    }

    std::vector<GaussianRational> a(n_max + 1);
    a[1] = GaussianRational::integer(1);
    for (long n = 2; n <= n_max; ++n) {
        long p = spf[n], m = n, k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        a[n] = a[m] * inv[p][k];
    }
    return {a.begin() + 1, a.end()};
}

std::string gaussian_str(const GaussianRational& v) {
    if (v.is_rational()) return v.re.get_str();
    return v.re.get_str() + "+" + v.im.get_str() + "*i";
}

} // namespace frobres
