// Dense univariate polynomials over an arbitrary field.
//
// The coefficient type C needs value semantics, exact +,-,*,/ and
// is_zero(); everything here is plain schoolbook algebra, which is the
// right tool at the degrees this library works with.

#pragma once

#include <cassert>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace stind {

template <class C>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(C c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly(C(1)); }
    static UPoly var() { return UPoly(std::vector<C>{C(0), C(1)}); }
    // c * x^k
    static UPoly monomial(C c, std::size_t k) {
        if (c.is_zero()) return UPoly();
        std::vector<C> v(k + 1, C(0));
        v[k] = std::move(c);
        return UPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const C& lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
    const std::vector<C>& coeffs() const { return c_; }

    bool is_constant() const { return c_.size() <= 1; }
    C constant_value() const { return c_.empty() ? C(0) : c_[0]; }

    // Number of trailing zero coefficients, i.e. multiplicity of the root 0.
    std::size_t valuation() const {
        std::size_t v = 0;
        while (v < c_.size() && c_[v].is_zero()) ++v;
        return v;
    }

    UPoly shift_down(std::size_t k) const { // divide by x^k; requires valuation >= k
        assert(valuation() >= k || is_zero());
        if (is_zero()) return *this;
        return UPoly(std::vector<C>(c_.begin() + static_cast<long>(k), c_.end()));
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    UPoly& operator+=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), C(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), C(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { a += b; return a; }
    friend UPoly operator-(UPoly a, const UPoly& b) { a -= b; return a; }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { *this = *this * o; return *this; }

    UPoly scaled(const C& s) const {
        if (s.is_zero()) return UPoly();
        UPoly r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] - b.c_[i]).is_zero()) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    // Euclidean division; o must be nonzero.
    static std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& o) {
        assert(!o.is_zero());
        UPoly q;
        const long db = o.degree();
        const C lcb_inv = C(1) / o.lc();
        while (!a.is_zero() && a.degree() >= db) {
            const std::size_t k = static_cast<std::size_t>(a.degree() - db);
            C f = a.lc() * lcb_inv;
            // subtract f * x^k * o
            if (q.c_.size() < k + 1) q.c_.resize(k + 1, C(0));
            q.c_[k] += f;
            for (std::size_t i = 0; i < o.c_.size(); ++i)
                a.c_[i + k] -= f * o.c_[i];
            a.trim_assume_top();
        }
        q.trim();
        a.trim();
        return {q, a};
    }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(C(1) / lc());
    }

    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<C> r(c_.size() - 1, C(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * C(static_cast<int>(i));
        return UPoly(std::move(r));
    }

    UPoly squarefree_part() const {
        if (degree() <= 0) return is_zero() ? *this : one();
        UPoly g = gcd(*this, derivative());
        if (g.degree() <= 0) return monic();
        return (*this / g).monic();
    }

    template <class X>
    X eval(const X& x) const { // Horner; X must absorb C by multiplication-с X(C)
        X r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + X(c_[i]);
        return r;
    }
    C operator()(const C& x) const { return eval<C>(x); }

    // p(x^m)
    UPoly stretch(std::size_t m) const {
        if (is_zero() || m == 1) return *this;
        std::vector<C> r(c_.size() * m - (m - 1), C(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i * m] = c_[i];
        return UPoly(std::move(r));
    }

    // p(c * x)
    UPoly scale_arg(const C& s) const {
        UPoly r = *this;
        C f(1);
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] = r.c_[i] * f;
            f = f * s;
        }
        r.trim();
        return r;
    }

    std::size_t size_hint() const { return c_.size(); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void trim_assume_top() { // top coefficient known to have been cancelled
        if (!c_.empty()) c_.pop_back();
        trim();
    }

    std::vector<C> c_; // c_[i] is the coefficient of x^i
};

} // namespace stind
