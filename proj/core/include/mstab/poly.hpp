#pragma once

#include <map>
#include <string>
#include <vector>

#include "mstab/f4.hpp"

namespace mstab {

/* Sparse multivariate polynomial over F4 with a named indeterminate set.
 * Canonical form: no zero coefficients; terms ordered lexicographically by
 * exponent vector, so equality is structural. */
class Poly {
public:
    using Expo = std::vector<uint8_t>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(F4 c, std::vector<std::string> vars = {});
    static Poly variable(const std::string& name, const std::vector<std::string>& vars);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Expo, F4>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    F4 coeff(const Expo& e) const;

    Poly& add_term(const Expo& e, F4 c);

    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    Poly& operator+=(const Poly& q) { *this = *this + q; return *this; }
    Poly& operator*=(const Poly& q) { *this = *this * q; return *this; }

    friend bool operator==(const Poly& p, const Poly& q) {
        return p.vars_ == q.vars_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    /* substitute values for all indeterminates */
    F4 eval(const std::vector<F4>& point) const;

    std::string str() const;

private:
    void check_vars(const Poly& q) const;

    std::vector<std::string> vars_;
    std::map<Expo, F4> terms_;
};

/* Square matrix over Poly, row-major. */
struct PolyMat {
    int n = 0;
    std::vector<Poly> a;

    PolyMat() = default;
    PolyMat(int dim, const std::vector<std::string>& vars)
        : n(dim), a(size_t(dim) * dim, Poly(vars)) {}

    Poly& at(int i, int j) { return a[size_t(i) * n + j]; }
    const Poly& at(int i, int j) const { return a[size_t(i) * n + j]; }
};

/* Exact determinant by Laplace expansion with column-subset memoization.
 * Throws on non-square or mixed indeterminate sets. */
Poly poly_det(const PolyMat& m);

/* Brute-force permutation expansion, for cross-checking poly_det (n <= 4). */
Poly poly_det_perm(const PolyMat& m);

}  // namespace mstab
