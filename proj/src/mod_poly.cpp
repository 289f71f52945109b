#include "frobres/mod_poly.hpp"

#include "frobres/errors.hpp"

namespace frobres {

static mpz_class mod(const mpz_class& a, const mpz_class& p) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

static mpz_class invmod(const mpz_class& a, const mpz_class& p) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw MathError("non-invertible leading coefficient mod p");
    return r;
}

ModPoly::ModPoly(std::vector<mpz_class> coeffs, mpz_class modulus)
    : c_(std::move(coeffs)), p_(std::move(modulus)) {
    if (p_ < 2) throw BadInputError("modulus must be >= 2");
    for (auto& x : c_) x = mod(x, p_);
    normalize();
}

ModPoly ModPoly::reduce(const IntPoly& f, const mpz_class& p) {
    return ModPoly(f.coeffs(), p);
}

ModPoly ModPoly::x(const mpz_class& p) { return ModPoly({0, 1}, p); }

ModPoly ModPoly::one(const mpz_class& p) { return ModPoly({1}, p); }

void ModPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void ModPoly::check_same(const ModPoly& o) const {
    if (p_ != o.p_) throw BadInputError("mixed moduli in ModPoly arithmetic");
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    check_same(o);
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return ModPoly(std::move(v), p_);
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    check_same(o);
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return ModPoly(std::move(v), p_);
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return ModPoly({}, p_);
    std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return ModPoly(std::move(v), p_);
}

ModPoly ModPoly::make_monic() const {
    if (is_zero() || is_monic()) return *this;
    mpz_class inv = invmod(c_.back(), p_);
    std::vector<mpz_class> v(c_);
    for (auto& x : v) x *= inv;
    return ModPoly(std::move(v), p_);
}

ModPoly ModPoly::rem(const ModPoly& d) const {
    check_same(d);
    if (d.is_zero()) throw BadInputError("division by zero polynomial");
    std::vector<mpz_class> r(c_);
    int dd = d.degree();
    mpz_class inv = d.is_monic() ? mpz_class(1) : invmod(d.c_.back(), p_);
    for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
        mpz_class t = mod(r[i] * inv, p_);
        if (t == 0) continue;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] = mod(r[i - dd + j] - t * d.c_[j], p_);
    }
    r.resize(std::min<size_t>(r.size(), dd));
    return ModPoly(std::move(r), p_);
}

mpz_class ModPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = mod(r * x + *it, p_);
    return r;
}

ModPoly gcd_mod(const ModPoly& a, const ModPoly& b) {
    if (a.modulus() != b.modulus()) throw BadInputError("gcd_mod: moduli differ");
    ModPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        ModPoly r2 = r0.rem(r1.make_monic());
        r0 = r1;
        r1 = r2;
    }
    return r0.make_monic();
}

ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& f) {
    if (!f.is_monic() || f.degree() < 1) throw BadInputError("powmod: modulus polynomial must be monic of degree >= 1");
    if (e < 0) throw BadInputError("powmod: negative exponent");
    ModPoly result = ModPoly::one(f.modulus()).rem(f);
    ModPoly b = base.rem(f);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (size_t i = bits; i-- > 0;) {
        result = (result * result).rem(f);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b).rem(f);
    }
    return result;
}

ModPoly powmod_x(const ModPoly& f, const mpz_class& e) {
    return powmod(ModPoly::x(f.modulus()), e, f);
}

std::vector<mpz_class> power_sums(const ModPoly& f, int k_max) {
    if (!f.is_monic() || f.degree() < 1) throw BadInputError("power_sums: f must be monic of degree >= 1");
    int n = f.degree();
    const mpz_class& p = f.modulus();
    // f = x^n + c[n-1] x^(n-1) + ... + c[0]; Newton:
    //   s_k + c[n-1] s_{k-1} + ... + c[n-k+1] s_1 + k c[n-k] = 0      (k <= n)
    //   s_k + c[n-1] s_{k-1} + ... + c[0] s_{k-n} = 0                 (k >  n)
    std::vector<mpz_class> s(k_max + 1);
    s[0] = mod(mpz_class(n), p);
    for (int k = 1; k <= k_max; ++k) {
        mpz_class acc = 0;
        int jmax = std::min(k - 1, n - 1);
        for (int j = 1; j <= jmax; ++j) acc += f[n - j] * s[k - j];
        if (k <= n)
            acc += mpz_class(k) * f[n - k];
        else
            acc += f[0] * s[k - n];
        s[k] = mod(-acc, p);
    }
    return s;
}

mpz_class trace_of(const ModPoly& g, const ModPoly& f) {
    if (g.degree() >= f.degree())
        throw BadInputError("trace_of: g must be reduced mod f first");
    if (g.is_zero()) return 0;
    std::vector<mpz_class> s = power_sums(f, g.degree());
    mpz_class t = 0;
    for (int k = 0; k <= g.degree(); ++k) t += g[k] * s[k];
    return mod(t, f.modulus());
}

std::vector<int> DegreeProfile::partition() const {
    std::vector<int> part;
    for (const auto& [e, m] : counts)
        for (int i = 0; i < m; ++i) part.push_back(e);
    return part;
}

DegreeProfile distinct_degree_profile(const ModPoly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw BadInputError("distinct_degree_profile: f must be monic of degree >= 1");
    const mpz_class& p = f.modulus();
    // squarefreeness gate: gcd(f, f') must be 1
    std::vector<mpz_class> dc(std::max(f.degree(), 1));
    for (int i = 1; i <= f.degree(); ++i) dc[i - 1] = f[i] * i;
    ModPoly fprime(std::move(dc), p);
    if (fprime.is_zero() || gcd_mod(f, fprime).degree() != 0)
        throw MathError("bad prime: f not squarefree mod p");

    DegreeProfile prof;
    ModPoly rem = f;
    ModPoly h = ModPoly::x(p).rem(rem); // x^(p^d) mod rem, built up iteratively
    int d = 0;
    while (rem.degree() > 0) {
        ++d;
        if (2 * d > rem.degree()) {
            // remainder is a single irreducible factor
            prof.counts[rem.degree()] += 1;
            break;
        }
        h = powmod(h, p, rem);
        ModPoly g = gcd_mod(rem, h - ModPoly::x(p).rem(rem));
        if (g.degree() > 0) {
            prof.counts[d] += g.degree() / d;
            // divide out the degree-d part: rem /= g
            ModPoly q({}, p);
            {
                std::vector<mpz_class> r(rem.coeffs());
                std::vector<mpz_class> qq(rem.degree() - g.degree() + 1, mpz_class(0));
                for (int i = static_cast<int>(qq.size()) - 1; i >= 0; --i) {
                    mpz_class t = r[i + g.degree()];
                    qq[i] = t;
                    if (t == 0) continue;
                    for (int j = 0; j <= g.degree(); ++j) {
                        mpz_class& slot = r[i + j];
                        slot -= t * g[j];
                        mpz_mod(slot.get_mpz_t(), slot.get_mpz_t(), p.get_mpz_t());
                    }
                }
                q = ModPoly(std::move(qq), p);
            }
            rem = q;
            h = h.rem(rem);
        }
    }
    return prof;
}

} // namespace frobres
