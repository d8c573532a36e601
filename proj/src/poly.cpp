#include "nesto/poly.hpp"

#include <algorithm>
#include <sstream>

namespace nesto {

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.normalize();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.normalize();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.normalize();
    return r;
}

IntPoly IntPoly::operator*(const Int& k) const {
    IntPoly r(*this);
    for (Int& v : r.c) v *= k;
    r.normalize();
    return r;
}

Int IntPoly::eval(const Int& x) const {
    Int r(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly IntPoly::shift_arg(long k) const {
    // Horner in the shifted variable
    IntPoly r;
    IntPoly lin;  // t + k
    lin.c = {Int(k), Int(1)};
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * lin + constant(*it);
    return r;
}

IntPoly IntPoly::reverse(int d) const {
    if (degree() > d) throw invalid_input_error("reverse: degree exceeds d");
    IntPoly r;
    r.c.assign(d + 1, Int(0));
    for (int i = 0; i <= degree(); ++i) r.c[d - i] = c[i];
    r.normalize();
    return r;
}

IntPoly IntPoly::derivative() const {
    IntPoly r;
    for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * Int(static_cast<long>(i)));
    r.normalize();
    return r;
}

bool IntPoly::is_palindromic(int d) const {
    if (degree() > d) return false;
    for (int i = 0; i <= d; ++i)
        if (coeff(i) != coeff(d - i)) return false;
    return true;
}

bool IntPoly::nonnegative() const {
    for (const Int& v : c)
        if (v < 0) return false;
    return true;
}

std::string IntPoly::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Int& a = c[i];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        bool show_coeff = (mag != 1 || i == 0);
        if (show_coeff) out << mag.get_str();
        if (i >= 1) {
            out << "t";
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

IntPoly GammaVector::expand() const {
    IntPoly h;
    IntPoly onet;  // 1 + t
    onet.c = {Int(1), Int(1)};
    for (size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] == 0) continue;
        IntPoly term = IntPoly::monomial(static_cast<int>(i), gamma[i]);
        for (int j = 0; j < d - 2 * static_cast<int>(i); ++j) term *= onet;
        h += term;
    }
    return h;
}

IntPoly h_from_f(const IntPoly& f, int d) {
    if (f.degree() > d) throw invalid_input_error("h_from_f: deg f exceeds dimension");
    return f.shift_arg(-1);
}

IntPoly f_from_h(const IntPoly& h) { return h.shift_arg(1); }

GammaVector gamma_from_h(const IntPoly& h, int d) {
    if (!h.is_palindromic(d))
        throw non_palindromic_error("gamma_from_h: h is not palindromic of degree " +
                                    std::to_string(d) + ": " + h.pretty());
    GammaVector g;
    g.d = d;
    g.gamma.assign(d / 2 + 1, Int(0));
    IntPoly rem = h;
    IntPoly onet;
    onet.c = {Int(1), Int(1)};
    for (int i = 0; i <= d / 2; ++i) {
        g.gamma[i] = rem.coeff(i);
        if (g.gamma[i] == 0) continue;
        IntPoly term = IntPoly::monomial(i, g.gamma[i]);
        for (int j = 0; j < d - 2 * i; ++j) term *= onet;
        rem -= term;
    }
    if (!rem.is_zero())
        throw cross_check_error("gamma_from_h: nonzero remainder after peeling");
    return g;
}

IntPoly eulerian_polynomial(int n) {
    if (n < 1) throw invalid_input_error("eulerian_polynomial: n must be >= 1");
    std::vector<Int> a{Int(1)};  // A_1
    for (int m = 2; m <= n; ++m) {
        std::vector<Int> b(m, Int(0));
        for (int k = 0; k < m; ++k) {
            // A(m,k) = (k+1) A(m-1,k) + (m-k) A(m-1,k-1)
            if (k < static_cast<int>(a.size())) b[k] += Int(k + 1) * a[k];
            if (k >= 1 && k - 1 < static_cast<int>(a.size())) b[k] += Int(m - k) * a[k - 1];
        }
        a = std::move(b);
    }
    return IntPoly(std::move(a));
}

IntPoly narayana_polynomial(int n) {
    if (n < 0) throw invalid_input_error("narayana_polynomial: n must be >= 0");
    if (n == 0) return IntPoly::one();
    std::vector<Int> v(n, Int(0));
    for (int k = 1; k <= n; ++k) {
        Int num = binomial(n, k) * binomial(n, k - 1);
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), Int(n).get_mpz_t());
        if (r != 0) throw cross_check_error("narayana_polynomial: non-integer N(n,k)");
        v[k - 1] = q;
    }
    return IntPoly(std::move(v));
}

IntPoly multiset_eulerian(const std::vector<int>& c, int size_cap) {
    long m = 0;
    for (int ci : c) {
        if (ci < 0) throw invalid_input_error("multiset_eulerian: negative multiplicity");
        m += ci;
    }
    if (m > size_cap)
        throw resource_cap_error("multiset_eulerian: multiset size " + std::to_string(m) +
                                 " exceeds cap " + std::to_string(size_cap));
    if (m == 0) return IntPoly::one();

    if (m <= 12) {
        // direct enumeration over multiset permutations
        std::vector<int> w;
        for (size_t i = 0; i < c.size(); ++i) w.insert(w.end(), c[i], static_cast<int>(i + 1));
        std::vector<Int> v(m, Int(0));
        do {
            int des = 0;
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1]) ++des;
            v[des] += 1;
        } while (std::next_permutation(w.begin(), w.end()));
        return IntPoly(std::move(v));
    }

    // A_c(t) = (1-t)^(m+1) * sum_{k>=0} prod_i binom(c_i+k, c_i) t^k, truncated
    // at degree m where all higher coefficients vanish
    std::vector<Int> s(m + 1);
    for (long k = 0; k <= m; ++k) {
        Int prod(1);
        for (int ci : c) prod *= binomial(ci + k, ci);
        s[k] = prod;
    }
    std::vector<Int> v(m, Int(0));
    for (long j = 0; j < m; ++j) {
        Int acc(0);
        for (long i = 0; i <= j; ++i) {
            Int term = binomial(m + 1, i) * s[j - i];
            if (i % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        v[j] = acc;
    }
    return IntPoly(std::move(v));
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace nesto
