#ifndef FROBRES_ARTIN_HPP
#define FROBRES_ARTIN_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "frobres/frob.hpp"
#include "frobres/gamma.hpp"

namespace frobres {

/// Exact complex rational a + bi. Character values given as decimal strings
/// parse to these exactly; plain rationals have im == 0.
struct GaussianRational {
    mpq_class re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    static GaussianRational integer(long v) { return {mpq_class(v), mpq_class(0)}; }

    bool is_rational() const { return im == 0; }
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);

/// Parse "-1", "0.25", "3/4"; throws BadInputError.
mpq_class parse_rational(const std::string& s);

/// One character of the group, keyed by the table's class labels.
struct CharacterTable {
    int dimension = 0;
    std::map<std::string, GaussianRational> values;

    const GaussianRational& at(const std::string& label) const;
};

/// Parse {"dimension": d, "values": {label: [re, im], ...}}.
CharacterTable character_from_json(const std::string& text);

/// Local factor P(T) = det(1 - rho(Frob) T) at an unramified class, from the
/// power traces p_k = chi(class of g^k) via Newton's identities. Coefficients
/// within 1e-20 of an integer are snapped (exact inputs are never perturbed).
/// class_of_power(k) must return the label of { g^k : g in C }.
std::vector<GaussianRational> euler_factor(const CharacterTable& chi, const std::string& class_label,
                                           const std::function<std::string(int)>& class_of_power);

/// Helper for euler_factor: power-class lookup built from the table's
/// generators (closure + conjugacy classes are re-derived and label-checked).
struct PowerClassLookup {
    explicit PowerClassLookup(const GammaTable& t, int k_max);
    std::string class_of_power(const std::string& label, int k) const;

  private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> maps_; // maps_[k][class]
};

/// Dirichlet coefficients a_1..a_N of prod_p P_p(p^-s)^-1. reports must cover
/// every prime <= N; bad primes use the supplied per-prime factors, or the
/// factor 1 (coefficients a_{p^k} = 0) when absent.
std::vector<GaussianRational> dirichlet_coefficients(
    const GammaTable& t, const CharacterTable& chi, const std::vector<FrobReport>& reports, long n_max,
    const std::map<mpz_class, std::vector<GaussianRational>>* ramified_factors = nullptr);

/// "2", "-1/3", or "re+im*i" for genuinely complex values.
std::string gaussian_str(const GaussianRational& v);

} // namespace frobres

#endif
