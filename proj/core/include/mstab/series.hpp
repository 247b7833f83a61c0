#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mstab/dyadic.hpp"
#include "mstab/f4.hpp"

namespace mstab {

/* Monomial in at most 3 series variables. */
struct SMon {
    std::array<uint8_t, 3> e{0, 0, 0};

    int total() const { return int(e[0]) + e[1] + e[2]; }
    friend bool operator<(const SMon& a, const SMon& b) { return a.e < b.e; }
    friend bool operator==(const SMon& a, const SMon& b) { return a.e == b.e; }

    static SMon var(int i, uint8_t p = 1) {
        SMon m;
        m.e[size_t(i)] = p;
        return m;
    }
    friend SMon operator*(const SMon& a, const SMon& b) {
        SMon m;
        for (int i = 0; i < 3; ++i) {
            int s = a.e[size_t(i)] + b.e[size_t(i)];
            if (s > 255)
                throw std::overflow_error("SMon: exponent overflow");
            m.e[size_t(i)] = uint8_t(s);
        }
        return m;
    }
};

/* Power series in `nvars` variables, truncated at total degree <= cap.
 * All arithmetic re-truncates to the cap.  C is F4 or Dyadic. */
template <class C>
class Series {
public:
    Series() = default;
    Series(int nvars, int cap) : nvars_(nvars), cap_(cap) {
        if (nvars < 1 || nvars > 3)
            throw std::invalid_argument("Series: supports 1..3 variables");
        if (cap < 1)
            throw std::invalid_argument("Series: degree cap must be positive");
    }

    static Series var(int i, int nvars, int cap) {
        Series s(nvars, cap);
        s.set(SMon::var(i), C(1));
        return s;
    }

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const std::map<SMon, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(const SMon& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }
    C coeff1(int deg) const { return coeff(SMon::var(0, uint8_t(deg))); }

    void set(const SMon& m, const C& c) {
        if (m.total() > cap_)
            return;
        if (c.is_zero())
            terms_.erase(m);
        else
            terms_[m] = c;
    }
    void add(const SMon& m, const C& c) {
        if (m.total() > cap_ || c.is_zero())
            return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    C constant_term() const { return coeff(SMon{}); }

    friend Series operator+(const Series& a, const Series& b) {
        a.check(b);
        Series r = a;
        for (const auto& [m, c] : b.terms_)
            r.add(m, c);
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        a.check(b);
        Series r(a.nvars_, a.cap_);
        for (const auto& [m1, c1] : a.terms_) {
            if (m1.total() > a.cap_)
                continue;
            for (const auto& [m2, c2] : b.terms_) {
                if (m1.total() + m2.total() > a.cap_)
                    continue;
                r.add(m1 * m2, c1 * c2);
            }
        }
        return r;
    }
    Series& operator+=(const Series& b) { *this = *this + b; return *this; }
    Series& operator*=(const Series& b) { *this = *this * b; return *this; }

    friend bool operator==(const Series& a, const Series& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series truncated(int newcap) const {
        Series r(nvars_, newcap);
        for (const auto& [m, c] : terms_)
            if (m.total() <= newcap)
                r.terms_[m] = c;
        return r;
    }

    /* substitute args[i] for variable i; all args share nvars/cap */
    Series compose(const std::vector<Series>& args) const {
        if (int(args.size()) != nvars_)
            throw std::invalid_argument("Series: wrong number of substitution arguments");
        for (const auto& g : args)
            if (!g.constant_term().is_zero())
                throw std::invalid_argument("Series: substitution needs zero constant term");
        int tn = args[0].nvars_, tc = args[0].cap_;
        Series r(tn, tc);
        /* memoized powers of each argument */
        std::vector<std::vector<Series>> pows(static_cast<size_t>(nvars_));
        for (int i = 0; i < nvars_; ++i)
            pows[size_t(i)].push_back(Series::one(tn, tc));
        auto power = [&](int i, int p) -> const Series& {
            auto& tab = pows[size_t(i)];
            while (int(tab.size()) <= p)
                tab.push_back(tab.back() * args[size_t(i)]);
            return tab[size_t(p)];
        };
        for (const auto& [m, c] : terms_) {
            if (m.total() > tc)
                continue;  // every argument has order >= 1
            Series t = Series::one(tn, tc);
            for (int i = 0; i < nvars_; ++i)
                if (m.e[size_t(i)] > 0)
                    t *= power(i, m.e[size_t(i)]);
            for (const auto& [mm, cc] : t.terms_)
                r.add(mm, c * cc);
        }
        return r;
    }

    static Series one(int nvars, int cap) {
        Series s(nvars, cap);
        s.set(SMon{}, C(1));
        return s;
    }

    std::string str(const std::vector<std::string>& names) const;

private:
    void check(const Series& b) const {
        if (nvars_ != b.nvars_ || cap_ != b.cap_)
            throw std::invalid_argument("Series: shape mismatch");
    }

    int nvars_ = 1;
    int cap_ = 1;
    std::map<SMon, C> terms_;
};

using SeriesF4 = Series<F4>;
using SeriesQ2 = Series<Dyadic>;

template <class C>
std::string Series<C>::str(const std::vector<std::string>& names) const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty())
            out += " + ";
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (m.e[size_t(i)] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += names[size_t(i)];
            if (m.e[size_t(i)] > 1)
                mono += "^" + std::to_string(int(m.e[size_t(i)]));
        }
        std::string cs;
        if constexpr (std::is_same_v<C, F4>)
            cs = c.str();
        else
            cs = c.str();
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else
            out += cs + "*" + mono;
    }
    return out;
}

}  // namespace mstab
