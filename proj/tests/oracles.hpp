// Test-only reference implementations, independent of the library's
// algorithms: Sylvester-determinant resultant, multiplication-matrix trace,
// brute-force factor degrees, naive exponentiation.
#ifndef FROBRES_TESTS_ORACLES_HPP
#define FROBRES_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "frobres/int_poly.hpp"
#include "frobres/mod_poly.hpp"

namespace oracles {

using frobres::IntPoly;
using frobres::ModPoly;

/// det of the Sylvester matrix by exact rational Gaussian elimination.
inline mpz_class sylvester_resultant(const IntPoly& a, const IntPoly& b) {
    int m = a.degree(), n = b.degree();
    if (m == 0 && n == 0) return 1;
    int size = m + n;
    std::vector<std::vector<mpq_class>> s(size, std::vector<mpq_class>(size, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];

    mpq_class det = 1;
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int r = col; r < size; ++r)
            if (s[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(s[pivot], s[col]);
            det = -det;
        }
        det *= s[col][col];
        for (int r = col + 1; r < size; ++r) {
            if (s[r][col] == 0) continue;
            mpq_class factor = s[r][col] / s[col][col];
            for (int c = col; c < size; ++c) s[r][c] -= factor * s[col][c];
        }
    }
    // the determinant of an integer matrix is an integer
    mpq_class canon = det;
    canon.canonicalize();
    return canon.get_num();
}

/// Trace of the explicit n x n multiplication-by-g matrix of F_p[x]/f.
inline mpz_class mult_matrix_trace(const ModPoly& g, const ModPoly& f) {
    int n = f.degree();
    const mpz_class& p = f.modulus();
    mpz_class tr = 0;
    ModPoly col = g;
    for (int j = 0; j < n; ++j) {
        if (col.degree() >= j) tr += col[j];
        col = (col * ModPoly::x(p)).rem(f);
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), tr.get_mpz_t(), p.get_mpz_t());
    return r;
}

/// Factor-degree multiset of monic squarefree f mod small p by trial division
/// with every monic polynomial of low degree.
inline std::vector<int> brute_factor_degrees(ModPoly f) {
    const mpz_class& p = f.modulus();
    long pl = f.modulus().get_si();
    std::vector<int> degrees;
    int d = 1;
    while (f.degree() > 0) {
        if (2 * d > f.degree()) {
            degrees.push_back(f.degree());
            break;
        }
        bool found = false;
        long count = 1;
        for (int i = 0; i < d; ++i) count *= pl;
        for (long code = 0; code < count && !found; ++code) {
            std::vector<mpz_class> cs(d + 1);
            long c = code;
            for (int i = 0; i < d; ++i) {
                cs[i] = c % pl;
                c /= pl;
            }
            cs[d] = 1;
            ModPoly cand(cs, p);
            if (f.rem(cand).is_zero()) {
                degrees.push_back(d);
                // exact division
                std::vector<mpz_class> q(f.degree() - d + 1, 0);
                ModPoly r = f;
                for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
                    q[i] = r.degree() == d + i ? r[d + i] : mpz_class(0);
                    if (q[i] != 0) {
                        std::vector<mpz_class> sub(i + d + 1, 0);
                        for (int k = 0; k <= d; ++k) sub[i + k] = q[i] * cand[k];
                        r = r - ModPoly(sub, p);
                    }
                }
                f = ModPoly(q, p);
                found = true;
            }
        }
        if (!found) ++d;
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

/// base^e mod f by naive repeated multiplication.
inline ModPoly naive_powmod(const ModPoly& base, long e, const ModPoly& f) {
    ModPoly r = ModPoly::one(f.modulus()).rem(f);
    for (long i = 0; i < e; ++i) r = (r * base).rem(f);
    return r;
}

} // namespace oracles

#endif
