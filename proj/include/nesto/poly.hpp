#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nesto/errors.hpp"

namespace nesto {

using Int = mpz_class;

// Dense univariate polynomial in t with arbitrary-precision integer
// coefficients.  Canonical form: no trailing zero coefficients, so the zero
// polynomial has an empty coefficient vector.
struct IntPoly {
    std::vector<Int> c;  // c[i] = coefficient of t^i

    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c.emplace_back(v);
        normalize();
    }
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }

    static IntPoly constant(const Int& v) {
        IntPoly p;
        p.c.push_back(v);
        p.normalize();
        return p;
    }
    static IntPoly one() { return constant(1); }
    // t^k
    static IntPoly monomial(int k, const Int& coeff = 1) {
        IntPoly p;
        p.c.assign(k + 1, Int(0));
        p.c[k] = coeff;
        p.normalize();
        return p;
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is reported as -1
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& coeff(int i) const {
        static const Int zero(0);
        if (i < 0 || i >= static_cast<int>(c.size())) return zero;
        return c[i];
    }

    bool operator==(const IntPoly& o) const { return c == o.c; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& k) const;
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    Int eval(const Int& x) const;

    // p(t + k), exact binomial change of basis
    IntPoly shift_arg(long k) const;
    // t^d * p(1/t); requires deg p <= d
    IntPoly reverse(int d) const;
    IntPoly derivative() const;
    // true iff coefficients read the same from both ends when padded to degree d
    bool is_palindromic(int d) const;
    bool nonnegative() const;

    // "1 + 5t + 5t^2 + t^3", low degree first; "0" for the zero polynomial
    std::string pretty() const;
};

// gamma with h(t) = sum_i gamma[i] t^i (1+t)^(d-2i)
struct GammaVector {
    std::vector<Int> gamma;  // indices 0..floor(d/2); trailing zeros kept
    int d = 0;

    IntPoly poly() const {
        std::vector<Int> v(gamma);
        return IntPoly(std::move(v));
    }
    // expand back to the h-polynomial (round-trip identity)
    IntPoly expand() const;
    bool nonnegative() const {
        for (const Int& g : gamma)
            if (g < 0) return false;
        return true;
    }
};

// h with h(t+1) = f(t); requires deg f <= d
IntPoly h_from_f(const IntPoly& f, int d);
IntPoly f_from_h(const IntPoly& h);

// Unique gamma expansion of a palindromic h of degree d.  Throws
// non_palindromic_error when h is not palindromic, since that signals a
// non-simple or mis-specified input rather than a representable value.
GammaVector gamma_from_h(const IntPoly& h, int d);

// A_n(t) = sum over permutations of [n] of t^des, n >= 1
IntPoly eulerian_polynomial(int n);

// C_n(t) = sum_k N(n,k) t^(k-1) with N(n,k) = (1/n) binom(n,k) binom(n,k-1); C_0 = 1
IntPoly narayana_polynomial(int n);

// Descent generating function over permutations of the multiset
// {1^c1, ..., k^ck}: direct enumeration for small multisets, the classical
// inclusion-exclusion solution of Simon Newcomb's problem above that.
IntPoly multiset_eulerian(const std::vector<int>& c, int size_cap = 64);

Int binomial(long n, long k);
Int factorial(long n);

}  // namespace nesto
