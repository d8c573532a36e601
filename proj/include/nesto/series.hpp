#pragma once

#include <map>
#include <vector>

#include "nesto/graph.hpp"
#include "nesto/poly.hpp"

namespace nesto {

// Truncated power series in one variable x with IntPoly coefficients in t.
// coeffs[m] is the coefficient of x^m; arithmetic is exact modulo x^{order+1}.
struct PolySeries1 {
    int order = 0;
    std::vector<IntPoly> coeffs;

    explicit PolySeries1(int order_) : order(order_), coeffs(order_ + 1) {}
    const IntPoly& coeff(int m) const { return coeffs.at(m); }
    bool operator==(const PolySeries1&) const = default;
};

PolySeries1 add(const PolySeries1& a, const PolySeries1& b);
PolySeries1 sub(const PolySeries1& a, const PolySeries1& b);
PolySeries1 mul(const PolySeries1& a, const PolySeries1& b);
PolySeries1 mul(const IntPoly& p, const PolySeries1& a);
// multiplicative inverse; requires unit constant term (x^0 coefficient = 1)
PolySeries1 inverse(const PolySeries1& a);

// Truncated power series in x_1..x_k; key = exponent vector, entries bounded
// by the per-variable truncation orders.
struct PolySeriesK {
    std::vector<int> orders;
    std::map<std::vector<int>, IntPoly> coeffs;

    explicit PolySeriesK(std::vector<int> orders_) : orders(std::move(orders_)) {}
    IntPoly coeff(const std::vector<int>& e) const;
    int arity() const { return static_cast<int>(orders.size()); }
    bool operator==(const PolySeriesK&) const = default;
};

PolySeriesK add(const PolySeriesK& a, const PolySeriesK& b);
PolySeriesK sub(const PolySeriesK& a, const PolySeriesK& b);
PolySeriesK mul(const PolySeriesK& a, const PolySeriesK& b);
PolySeriesK mul(const IntPoly& p, const PolySeriesK& a);
PolySeriesK constant_series(const IntPoly& p, std::vector<int> orders);
// place the single-variable series a into variable pos of a k-variable series
PolySeriesK embed(const PolySeries1& a, int pos, std::vector<int> orders);
// multiplicative inverse; requires unit constant term
PolySeriesK inverse(const PolySeriesK& a);

// exact quotient p / (t-1); throws cross_check_error on nonzero remainder
IntPoly divide_by_t_minus_1(const IntPoly& p);

// generating function for the simplicial-face polynomials of stacked
// path polytopes: C = t x C^2 + (1+t) x C + x, coefficient of x^n is
// narayana_polynomial(n)
PolySeries1 narayana_series(int order);

// coefficient of x_1^{a_1+1}..x_k^{a_k+1} is the h-polynomial of the spider
// graph with k legs of lengths a_1..a_k
PolySeriesK t_series(const std::vector<int>& orders);

// coefficient of y_1^{c_1}..y_k^{c_k} is the descent polynomial over
// permutations of the multiset {1^{c_1},..,k^{c_k}}
PolySeriesK newcomb_series(const std::vector<int>& orders);

struct FSeriesBundle {
    PolySeries1 fa;   // coeff of x^{n+1} = reduced f-polynomial of Path_n
    PolySeriesK ft;   // coeff of x^{a+1} vector = reduced f of spider graph
    PolySeriesK fh;   // coeff of x^{a} vector = reduced f of hedgehog graph
};

FSeriesBundle fa_fh_ft_series(const std::vector<int>& orders);

// Coefficients g_0..g_{n0} expanding h of the spliced family G_n over the
// path h-polynomials: h_{G_n} = sum_i g_i(t) * h_{Path_{n-i}}(t) for all
// n > n0, where n0 = #unmarked vertices of A and B. Solves an exact linear
// system from n = n0+1..2n0+2, verifies one held-out n, and asserts
// integrality, deg g_i <= i, and palindromicity t^i g_i(1/t) = g_i(t).
std::vector<IntPoly> g_polynomial(const Graph& a, int a_mark, const Graph& b, int b_mark);

// the n-vertex member of the spliced family (marked vertices joined by a
// path so the total vertex count is n; marks coincide when n = n0+1)
Graph path_like_graph(const Graph& a, int a_mark, const Graph& b, int b_mark, int n);

}  // namespace nesto
