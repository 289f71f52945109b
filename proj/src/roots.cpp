#include "frobres/roots.hpp"

#include <algorithm>

#include "frobres/errors.hpp"

namespace frobres {

long default_start_bits(const IntPoly& f) {
    long bits = 0;
    for (const auto& c : f.coeffs())
        bits = std::max(bits, static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)));
    return std::max(64 + 32 * static_cast<long>(f.degree()), bits + 64);
}

namespace {

struct EvalBound {
    Cplx value;
    BigFloat abs_bound; // upper bound for the rounding error of the evaluation
};

// Horner evaluation with a parallel run on absolute values to bound roundoff.
EvalBound eval_with_bound(const std::vector<BigFloat>& coeffs, const Cplx& z, mpfr_prec_t prec) {
    Cplx acc(prec);
    BigFloat mag(prec); // sum of |c_k| * |z|_1^k, accumulated alongside
    BigFloat z1 = z.re.abs() + z.im.abs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * z + Cplx(*it, BigFloat(prec));
        mag = mag * z1 + it->abs();
    }
    long p = static_cast<long>(prec);
    return {acc, (mag * BigFloat::of(static_cast<long>(coeffs.size()) + 2, prec)).ldexp(-p + 4)};
}

BigFloat upper_abs(const Cplx& z) { return z.re.abs() + z.im.abs(); }
BigFloat lower_abs(const Cplx& z) { return std::max(z.re.abs(), z.im.abs()); }

std::vector<BigFloat> to_floats(const IntPoly& f, mpfr_prec_t prec) {
    std::vector<BigFloat> v;
    v.reserve(f.degree() + 1);
    for (const auto& c : f.coeffs()) v.push_back(BigFloat::of(c, prec));
    return v;
}

std::vector<Cplx> aberth(const IntPoly& f, mpfr_prec_t prec, const std::vector<Cplx>* warm) {
    int n = f.degree();
    std::vector<BigFloat> fc = to_floats(f, prec);
    std::vector<BigFloat> dc;
    dc.reserve(n);
    for (int i = 1; i <= n; ++i) dc.push_back(BigFloat::of(mpz_class(f[i] * i), prec));

    std::vector<Cplx> z;
    if (warm) {
        for (const auto& w : *warm) {
            Cplx c(prec);
            c.re = c.re + w.re; // re-round into the new precision
            c.im = c.im + w.im;
            z.push_back(std::move(c));
        }
    } else {
        // Cauchy bound circle with a fixed asymmetric angle offset
        BigFloat radius = BigFloat::of(1, prec);
        for (int i = 0; i < n; ++i) {
            BigFloat q = (BigFloat::of(f[i], prec) / BigFloat::of(f[n], prec)).abs();
            if (q > radius - BigFloat::of(1, prec)) radius = BigFloat::of(1, prec) + q;
        }
        BigFloat twopi = BigFloat::pi(prec).ldexp(1);
        for (int k = 0; k < n; ++k) {
            BigFloat theta = twopi * (BigFloat::of(4 * k + 1, prec) / BigFloat::of(4 * n, prec)) +
                             BigFloat::parse("0.40123", prec);
            z.emplace_back(radius * theta.cos(), radius * theta.sin());
        }
    }

    const long p = static_cast<long>(prec);
    BigFloat target = BigFloat::pow2(-(p - 12), prec);
    BigFloat best_max(prec);
    int last_improve = 0;
    int max_sweeps = 400 + 20 * n;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        BigFloat max_rel(prec);
        for (int i = 0; i < n; ++i) {
            Cplx fz = eval_with_bound(fc, z[i], prec).value;
            if (fz.re.is_zero() && fz.im.is_zero()) continue;
            Cplx fpz = eval_with_bound(dc, z[i], prec).value;
            Cplx nwt = fz / fpz;
            Cplx s(prec);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Cplx d = z[i] - z[j];
                s = s + Cplx(BigFloat::of(1, prec), BigFloat(prec)) / d;
            }
            Cplx denom = Cplx(BigFloat::of(1, prec), BigFloat(prec)) - nwt * s;
            Cplx w = nwt / denom;
            if (!mpfr_number_p(w.re.raw()) || !mpfr_number_p(w.im.raw())) {
                // colliding iterates; nudge deterministically and continue
                z[i].re = z[i].re + BigFloat::parse("1e-3", prec) * BigFloat::of(i + 1, prec);
                continue;
            }
            z[i] = z[i] - w;
            BigFloat scale = std::max(upper_abs(z[i]), BigFloat::of(1, prec));
            BigFloat rel = upper_abs(w) / scale;
            if (rel > max_rel) max_rel = rel;
        }
        if (max_rel < target) break;
        if (sweep == 0 || max_rel < best_max) {
            best_max = max_rel;
            last_improve = sweep;
        } else if (sweep - last_improve > 50) {
            break; // settled at the attainable floor; certification decides
        }
    }
    return z;
}

} // namespace

RootSystem find_roots(const IntPoly& f, long precision_bits) {
    if (f.degree() < 1) throw BadInputError("find_roots: degree must be >= 1");
    if (!is_squarefree_over_q(f)) throw BadInputError("find_roots: f is not squarefree over Q");
    return [&] {
        std::vector<Cplx> z = aberth(f, precision_bits, nullptr);
        RootSystem rs;
        rs.precision_bits = precision_bits;
        rs.tag = RootSystem::Ordering::raw;

        mpfr_prec_t prec = precision_bits;
        int n = f.degree();
        std::vector<BigFloat> fc = to_floats(f, prec);
        std::vector<BigFloat> dc;
        for (int i = 1; i <= n; ++i) dc.push_back(BigFloat::of(mpz_class(f[i] * i), prec));

        for (int i = 0; i < n; ++i) {
            EvalBound fz = eval_with_bound(fc, z[i], prec);
            EvalBound fpz = eval_with_bound(dc, z[i], prec);
            BigFloat denom = lower_abs(fpz.value) - fpz.abs_bound;
            if (!(denom.sign() > 0)) throw PrecisionEscalation{"derivative too small to certify"};
            BigFloat r = BigFloat::of(2L * n, prec) * (upper_abs(fz.value) + fz.abs_bound) / denom;
            rs.roots.emplace_back(z[i].re, z[i].im, r);
        }
        // pairwise disjointness: lower bound of centre distance vs radius sum
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                BigFloat dist = std::max((rs.roots[i].re - rs.roots[j].re).abs(),
                                         (rs.roots[i].im - rs.roots[j].im).abs());
                if (!(dist > rs.roots[i].err + rs.roots[j].err))
                    throw PrecisionEscalation{"root disks overlap"};
            }
        }
        return rs;
    }();
}

namespace {

// Certified lexicographic (re, im) comparison; -1, 0 reserved for "throws".
bool certified_less(const BigComplex& a, const BigComplex& b) {
    BigFloat rr = a.err + b.err;
    if ((a.re - b.re).abs() > rr) return a.re < b.re;
    if ((a.im - b.im).abs() > rr) return a.im < b.im;
    throw PrecisionEscalation{"canonical order: unresolved tie"};
}

} // namespace

RootSystem canonical_order(const RootSystem& rs) {
    RootSystem out = rs;
    // insertion sort with certified comparisons; n is small
    for (int i = 1; i < out.n(); ++i) {
        BigComplex key = out.roots[i];
        int j = i - 1;
        while (j >= 0 && certified_less(key, out.roots[j])) {
            out.roots[j + 1] = out.roots[j];
            --j;
        }
        out.roots[j + 1] = key;
    }
    out.tag = RootSystem::Ordering::canonical;
    return out;
}

RootSystem escalate(const IntPoly& f, const RootSystem& rs, long ceiling) {
    long next = rs.precision_bits * 2;
    if (next > ceiling)
        throw ResourceCapError("precision ceiling exceeded at " + std::to_string(rs.precision_bits) +
                               " bits (ceiling " + std::to_string(ceiling) + ")");
    std::vector<Cplx> warm;
    for (const auto& r : rs.roots) warm.emplace_back(r.re, r.im);
    std::vector<Cplx> z = aberth(f, next, &warm);

    mpfr_prec_t prec = next;
    int n = f.degree();
    std::vector<BigFloat> fc = to_floats(f, prec);
    std::vector<BigFloat> dc;
    for (int i = 1; i <= n; ++i) dc.push_back(BigFloat::of(mpz_class(f[i] * i), prec));

    RootSystem out;
    out.precision_bits = next;
    out.tag = rs.tag;
    for (int i = 0; i < n; ++i) {
        EvalBound fz = eval_with_bound(fc, z[i], prec);
        EvalBound fpz = eval_with_bound(dc, z[i], prec);
        BigFloat denom = lower_abs(fpz.value) - fpz.abs_bound;
        if (!(denom.sign() > 0)) throw MathError("escalation failed to certify derivative");
        BigFloat r = BigFloat::of(2L * n, prec) * (upper_abs(fz.value) + fz.abs_bound) / denom;
        out.roots.emplace_back(z[i].re, z[i].im, r);
    }
    // warm-started indices must stay inside the previous disks
    for (int i = 0; i < n; ++i) {
        BigFloat drift = (out.roots[i].re - rs.roots[i].re).abs() + (out.roots[i].im - rs.roots[i].im).abs();
        if (!(drift <= rs.roots[i].err + out.roots[i].err + rs.roots[i].err))
            throw MathError("escalation changed the root assignment");
    }
    if (rs.tag == RootSystem::Ordering::canonical) {
        // ordering must be reproducible at the higher precision
        RootSystem re = canonical_order(out);
        for (int i = 0; i < n; ++i) {
            BigFloat d = (re.roots[i].re - out.roots[i].re).abs() + (re.roots[i].im - out.roots[i].im).abs();
            if (!(d <= out.roots[i].err + re.roots[i].err))
                throw MathError("canonical ordering unstable under escalation");
        }
    }
    return out;
}

RootSystem certified_roots(const IntPoly& f, long start_bits, long ceiling) {
    long bits = start_bits > 0 ? start_bits : default_start_bits(f);
    RootSystem rs;
    bool have = false;
    while (true) {
        try {
            if (!have) {
                rs = find_roots(f, bits);
                have = true;
            }
            return canonical_order(rs);
        } catch (const PrecisionEscalation&) {
            if (have) {
                rs = escalate(f, rs, ceiling);
                bits = rs.precision_bits;
            } else {
                bits *= 2;
                if (bits > ceiling) throw ResourceCapError("precision ceiling exceeded during root search");
            }
        }
    }
}

RootSystem user_order(const RootSystem& rs, const std::vector<std::pair<std::string, std::string>>& points) {
    int n = rs.n();
    if (static_cast<int>(points.size()) != n)
        throw BadInputError("root ordering file must list exactly " + std::to_string(n) + " roots");
    mpfr_prec_t prec = rs.precision_bits;

    // matching disks: max(err, half the distance to the nearest other root)
    std::vector<BigFloat> radius;
    for (int i = 0; i < n; ++i) {
        BigFloat best(prec);
        bool first = true;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            BigFloat d = std::max((rs.roots[i].re - rs.roots[j].re).abs(),
                                  (rs.roots[i].im - rs.roots[j].im).abs());
            if (first || d < best) best = d;
            first = false;
        }
        radius.push_back(std::max(rs.roots[i].err, best.ldexp(-1)));
    }

    std::vector<int> pick(n, -1);
    std::vector<bool> used(n, false);
    for (int k = 0; k < n; ++k) {
        BigFloat pre = BigFloat::parse(points[k].first, prec);
        BigFloat pim = BigFloat::parse(points[k].second, prec);
        int hit = -1;
        for (int i = 0; i < n; ++i) {
            BigFloat d = std::max((rs.roots[i].re - pre).abs(), (rs.roots[i].im - pim).abs());
            if (d < radius[i]) {
                if (hit != -1)
                    throw BadInputError("root approximation on line " + std::to_string(k + 1) +
                                        " is ambiguous between two roots");
                hit = i;
            }
        }
        if (hit == -1)
            throw BadInputError("root approximation on line " + std::to_string(k + 1) +
                                " lies outside all root disks");
        if (used[hit])
            throw BadInputError("root approximation on line " + std::to_string(k + 1) +
                                " matches an already-claimed root");
        used[hit] = true;
        pick[k] = hit;
    }

    RootSystem out;
    out.precision_bits = rs.precision_bits;
    out.tag = RootSystem::Ordering::user;
    for (int k = 0; k < n; ++k) out.roots.push_back(rs.roots[pick[k]]);
    return out;
}

} // namespace frobres
