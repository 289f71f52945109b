#include "frobres/int_poly.hpp"

#include <sstream>

#include "frobres/errors.hpp"

namespace frobres {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const mpz_class& c, int k) {
    std::vector<mpz_class> v(k + 1, mpz_class(0));
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::parse_csv(const std::string& s) {
    std::vector<mpz_class> v;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw BadInputError("empty coefficient in \"" + s + "\"");
        try {
            v.emplace_back(cur, 10);
        } catch (const std::invalid_argument&) {
            throw BadInputError("bad integer coefficient \"" + cur + "\"");
        }
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',') {
            flush();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    flush();
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> v(c_);
    for (auto& x : v) x = -x;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const mpz_class& k) const {
    std::vector<mpz_class> v(c_);
    for (auto& x : v) x *= k;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::divexact(const mpz_class& k) const {
    std::vector<mpz_class> v(c_);
    for (auto& x : v) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
        x = q;
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<mpz_class> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(v));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::string IntPoly::csv() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    if (c_.empty()) os << "0";
    return os.str();
}

std::string IntPoly::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        mpz_class a = ::abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) os << a;
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

static mpz_class zpow(const mpz_class& b, long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// Pseudo-remainder: the remainder of lc(B)^(deg A - deg B + 1) * A by B.
static IntPoly prem(const IntPoly& A, const IntPoly& B) {
    int dB = B.degree();
    long e = A.degree() - dB + 1;
    std::vector<mpz_class> r(A.coeffs());
    const mpz_class& d = B.lc();
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= 0 && r[dr] == 0) --dr;
    while (dr >= dB) {
        mpz_class top = r[dr];
        for (int i = 0; i <= dr; ++i) r[i] *= d;
        for (int i = 0; i <= dB; ++i) r[dr - dB + i] -= top * B[i];
        --e;
        while (dr >= 0 && r[dr] == 0) --dr;
    }
    IntPoly R(std::move(r));
    if (e > 0) R = R.scaled(zpow(d, e));
    return R;
}

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) throw BadInputError("resultant of zero polynomial");
    if (a.degree() == 0 && b.degree() == 0) return 1;
    if (a.degree() == 0) return zpow(a.lc(), b.degree());
    if (b.degree() == 0) return zpow(b.lc(), a.degree());

    IntPoly P = a, Q = b;
    int sign = 1;
    if (P.degree() < Q.degree()) {
        std::swap(P, Q);
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    }

    mpz_class ca = P.content(), cb = Q.content();
    P = P.divexact(ca);
    Q = Q.divexact(cb);
    mpz_class t = zpow(ca, Q.degree()) * zpow(cb, P.degree());

    mpz_class g = 1, h = 1;
    int s = 1;
    while (true) {
        int dP = P.degree(), dQ = Q.degree();
        int delta = dP - dQ;
        if ((dP & 1) && (dQ & 1)) s = -s;
        IntPoly R = prem(P, Q);
        P = Q;
        if (R.is_zero()) return 0; // positive-degree common factor
        mpz_class divisor = g * zpow(h, delta);
        Q = R.divexact(divisor);
        g = P.lc();
        if (delta > 0) {
            mpz_class num = zpow(g, delta), den = zpow(h, delta - 1), q;
            mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            h = q;
        }
        if (Q.degree() <= 0) break;
    }
    int dP = P.degree();
    mpz_class num = zpow(Q.lc(), dP), den = zpow(h, dP - 1), hh;
    mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return mpz_class(sign * s) * t * hh;
}

mpz_class discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw BadInputError("discriminant needs degree >= 1");
    if (f.degree() == 1) return 1;
    mpz_class r = resultant(f, f.derivative());
    long n = f.degree();
    mpz_class d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.lc().get_mpz_t());
    if (((n * (n - 1) / 2) & 1) != 0) d = -d;
    return d;
}

IntPoly make_monic_integral(const IntPoly& f) {
    if (f.degree() < 1) throw BadInputError("normalization needs degree >= 1");
    if (f.is_monic()) return f;
    const mpz_class& c = f.lc();
    int n = f.degree();
    std::vector<mpz_class> v(n + 1);
    for (int k = 0; k < n; ++k) v[k] = f[k] * zpow(c, n - 1 - k);
    v[n] = 1;
    return IntPoly(std::move(v));
}

bool is_squarefree_over_q(const IntPoly& f) {
    if (f.degree() < 1) return !f.is_zero();
    if (f.degree() == 1) return true;
    return resultant(f, f.derivative()) != 0;
}

} // namespace frobres
