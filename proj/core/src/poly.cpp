#include "mstab/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace mstab {

Poly Poly::constant(F4 c, std::vector<std::string> vars) {
    Poly p(std::move(vars));
    if (!c.is_zero())
        p.terms_[Expo(p.vars_.size(), 0)] = c;
    return p;
}

Poly Poly::variable(const std::string& name, const std::vector<std::string>& vars) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
        throw std::invalid_argument("Poly: unknown indeterminate " + name);
    Poly p(vars);
    Expo e(vars.size(), 0);
    e[size_t(it - vars.begin())] = 1;
    p.terms_[e] = F4::one();
    return p;
}

F4 Poly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F4::zero() : it->second;
}

Poly& Poly::add_term(const Expo& e, F4 c) {
    if (e.size() != vars_.size())
        throw std::invalid_argument("Poly: exponent arity mismatch");
    if (c.is_zero())
        return *this;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
    return *this;
}

void Poly::check_vars(const Poly& q) const {
    if (vars_ != q.vars_)
        throw std::invalid_argument("Poly: operands have different indeterminate sets");
}

Poly operator+(const Poly& p, const Poly& q) {
    p.check_vars(q);
    Poly r = p;
    for (const auto& [e, c] : q.terms_)
        r.add_term(e, c);
    return r;
}

Poly operator*(const Poly& p, const Poly& q) {
    p.check_vars(q);
    Poly r(p.vars_);
    for (const auto& [e1, c1] : p.terms_)
        for (const auto& [e2, c2] : q.terms_) {
            Poly::Expo e(e1.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = uint8_t(e1[i] + e2[i]);
            r.add_term(e, c1 * c2);
        }
    return r;
}

F4 Poly::eval(const std::vector<F4>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("Poly: evaluation point arity mismatch");
    F4 acc = F4::zero();
    for (const auto& [e, c] : terms_) {
        F4 t = c;
        for (size_t i = 0; i < e.size(); ++i)
            t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

std::string Poly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty())
            out += " + ";
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_[i];
            if (e[i] > 1)
                mono += "^" + std::to_string(int(e[i]));
        }
        if (mono.empty())
            out += c.str();
        else if (c == F4::one())
            out += mono;
        else
            out += c.str() + "*" + mono;
    }
    return out;
}

/* det over the rows r..n-1 and the column subset encoded in mask */
static Poly det_minor(const PolyMat& m, int r, unsigned mask,
                      std::unordered_map<unsigned, Poly>& memo,
                      const std::vector<std::string>& vars) {
    if (r == m.n)
        return Poly::constant(F4::one(), vars);
    auto it = memo.find(mask);
    if (it != memo.end())
        return it->second;
    Poly acc(vars);
    for (int j = 0; j < m.n; ++j) {
        if (!(mask & (1u << j)))
            continue;
        const Poly& entry = m.at(r, j);
        if (!entry.is_zero())
            acc += entry * det_minor(m, r + 1, mask & ~(1u << j), memo, vars);
    }
    memo.emplace(mask, acc);
    return acc;
}

Poly poly_det(const PolyMat& m) {
    if (m.n == 0)
        throw std::invalid_argument("poly_det: empty matrix");
    if (int(m.a.size()) != m.n * m.n)
        throw std::invalid_argument("poly_det: matrix is not square");
    const auto& vars = m.a[0].vars();
    for (const auto& p : m.a)
        if (p.vars() != vars)
            throw std::invalid_argument("poly_det: entries have mixed indeterminate sets");
    std::unordered_map<unsigned, Poly> memo;
    return det_minor(m, 0, (1u << m.n) - 1, memo, vars);
}

Poly poly_det_perm(const PolyMat& m) {
    if (int(m.a.size()) != m.n * m.n)
        throw std::invalid_argument("poly_det_perm: matrix is not square");
    const auto& vars = m.a[0].vars();
    std::vector<int> perm(m.n);
    for (int i = 0; i < m.n; ++i)
        perm[i] = i;
    Poly acc(vars);
    do {
        Poly t = Poly::constant(F4::one(), vars);  // char 2: signs are trivial
        for (int i = 0; i < m.n; ++i)
            t *= m.at(i, perm[i]);
        acc += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

}  // namespace mstab
