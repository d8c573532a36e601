#include "nesto/series.hpp"

#include <algorithm>
#include <numeric>

#include "nesto/building.hpp"
#include "nesto/nested.hpp"

namespace nesto {

namespace {

void check_same_order(int a, int b) {
    if (a != b) throw invalid_input_error("series: mismatched truncation orders");
}

// all exponent vectors e with 0 <= e_i <= orders[i], sorted by total degree
std::vector<std::vector<int>> graded_exponents(const std::vector<int>& orders) {
    std::vector<std::vector<int>> out{{}};
    for (int cap : orders) {
        std::vector<std::vector<int>> next;
        for (const auto& e : out)
            for (int v = 0; v <= cap; ++v) {
                next.push_back(e);
                next.back().push_back(v);
            }
        out = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });
    return out;
}

}  // namespace

PolySeries1 add(const PolySeries1& a, const PolySeries1& b) {
    check_same_order(a.order, b.order);
    PolySeries1 r(a.order);
    for (int m = 0; m <= a.order; ++m) r.coeffs[m] = a.coeffs[m] + b.coeffs[m];
    return r;
}

PolySeries1 sub(const PolySeries1& a, const PolySeries1& b) {
    check_same_order(a.order, b.order);
    PolySeries1 r(a.order);
    for (int m = 0; m <= a.order; ++m) r.coeffs[m] = a.coeffs[m] - b.coeffs[m];
    return r;
}

PolySeries1 mul(const PolySeries1& a, const PolySeries1& b) {
    check_same_order(a.order, b.order);
    PolySeries1 r(a.order);
    for (int i = 0; i <= a.order; ++i)
        for (int j = 0; i + j <= a.order; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

PolySeries1 mul(const IntPoly& p, const PolySeries1& a) {
    PolySeries1 r(a.order);
    for (int m = 0; m <= a.order; ++m) r.coeffs[m] = p * a.coeffs[m];
    return r;
}

PolySeries1 inverse(const PolySeries1& a) {
    if (a.coeffs[0] != IntPoly::one())
        throw invalid_input_error("series: inverse needs unit constant term");
    PolySeries1 r(a.order);
    r.coeffs[0] = IntPoly::one();
    for (int m = 1; m <= a.order; ++m) {
        IntPoly s;
        for (int j = 1; j <= m; ++j) s += a.coeffs[j] * r.coeffs[m - j];
        r.coeffs[m] = IntPoly{} - s;
    }
    return r;
}

IntPoly PolySeriesK::coeff(const std::vector<int>& e) const {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? IntPoly{} : it->second;
}

PolySeriesK add(const PolySeriesK& a, const PolySeriesK& b) {
    if (a.orders != b.orders) throw invalid_input_error("series: mismatched truncation orders");
    PolySeriesK r = a;
    for (const auto& [e, p] : b.coeffs) {
        r.coeffs[e] += p;
        if (r.coeffs[e] == IntPoly{}) r.coeffs.erase(e);
    }
    return r;
}

PolySeriesK sub(const PolySeriesK& a, const PolySeriesK& b) {
    return add(a, mul(IntPoly{{-1}}, b));
}

PolySeriesK mul(const PolySeriesK& a, const PolySeriesK& b) {
    if (a.orders != b.orders) throw invalid_input_error("series: mismatched truncation orders");
    PolySeriesK r(a.orders);
    int k = a.arity();
    for (const auto& [ea, pa] : a.coeffs)
        for (const auto& [eb, pb] : b.coeffs) {
            std::vector<int> e(k);
            bool fits = true;
            for (int i = 0; i < k; ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > a.orders[i]) fits = false;
            }
            if (fits) r.coeffs[e] += pa * pb;
        }
    std::erase_if(r.coeffs, [](const auto& kv) { return kv.second == IntPoly{}; });
    return r;
}

PolySeriesK mul(const IntPoly& p, const PolySeriesK& a) {
    PolySeriesK r(a.orders);
    if (p == IntPoly{}) return r;
    for (const auto& [e, q] : a.coeffs) r.coeffs[e] = p * q;
    return r;
}

PolySeriesK constant_series(const IntPoly& p, std::vector<int> orders) {
    PolySeriesK r(std::move(orders));
    if (p != IntPoly{}) r.coeffs[std::vector<int>(r.arity(), 0)] = p;
    return r;
}

PolySeriesK embed(const PolySeries1& a, int pos, std::vector<int> orders) {
    PolySeriesK r(std::move(orders));
    if (pos < 0 || pos >= r.arity()) throw invalid_input_error("series: embed position");
    if (a.order < r.orders[pos]) throw invalid_input_error("series: embed source too short");
    for (int m = 0; m <= r.orders[pos]; ++m) {
        if (a.coeffs[m] == IntPoly{}) continue;
        std::vector<int> e(r.arity(), 0);
        e[pos] = m;
        r.coeffs[e] = a.coeffs[m];
    }
    return r;
}

PolySeriesK inverse(const PolySeriesK& a) {
    std::vector<int> zero(a.arity(), 0);
    if (a.coeff(zero) != IntPoly::one())
        throw invalid_input_error("series: inverse needs unit constant term");
    PolySeriesK r(a.orders);
    r.coeffs[zero] = IntPoly::one();
    for (const auto& e : graded_exponents(a.orders)) {
        if (e == zero) continue;
        // r[e] = -sum over nonzero f <= e of a[f] * r[e-f]
        IntPoly s;
        for (const auto& [f, pf] : a.coeffs) {
            bool ok = true;
            std::vector<int> rest(a.arity());
            int tot = 0;
            for (int i = 0; i < a.arity(); ++i) {
                rest[i] = e[i] - f[i];
                tot += f[i];
                if (rest[i] < 0) ok = false;
            }
            if (!ok || tot == 0) continue;
            auto it = r.coeffs.find(rest);
            if (it != r.coeffs.end()) s += pf * it->second;
        }
        if (s != IntPoly{}) r.coeffs[e] = IntPoly{} - s;
    }
    return r;
}

IntPoly divide_by_t_minus_1(const IntPoly& p) {
    // synthetic division by (t - 1): remainder is p(1)
    int d = p.degree();
    if (d < 0) return IntPoly{};
    std::vector<Int> q(std::max(d, 0), 0);
    Int carry = 0;
    for (int m = d; m >= 1; --m) {
        carry += p.coeff(m);
        q[m - 1] = carry;
    }
    if (carry + p.coeff(0) != 0)
        throw cross_check_error("series: division by (t-1) left a remainder");
    return IntPoly(q);
}

PolySeries1 narayana_series(int order) {
    if (order < 1) throw invalid_input_error("series: order must be positive");
    IntPoly t = IntPoly::monomial(1), one_plus_t{{1, 1}};
    PolySeries1 x(order);
    x.coeffs[1] = IntPoly::one();
    PolySeries1 c(order);
    for (int it = 0; it <= order; ++it)
        c = add(add(mul(t, mul(x, mul(c, c))), mul(one_plus_t, mul(x, c))), x);
    // residual of the defining equation must vanish at this truncation
    PolySeries1 res = sub(c, add(add(mul(t, mul(x, mul(c, c))), mul(one_plus_t, mul(x, c))), x));
    if (res != PolySeries1(order)) throw cross_check_error("series: fixed point did not converge");
    return c;
}

namespace {

// phi(x) = x (1 + t C(t, x)) to the given order
PolySeries1 branch_series(int order) {
    PolySeries1 c = narayana_series(order);
    PolySeries1 x(order);
    x.coeffs[1] = IntPoly::one();
    PolySeries1 one(order);
    one.coeffs[0] = IntPoly::one();
    return mul(x, add(one, mul(IntPoly::monomial(1), c)));
}

}  // namespace

PolySeriesK t_series(const std::vector<int>& orders) {
    int k = static_cast<int>(orders.size());
    if (k < 1) throw invalid_input_error("series: need at least one variable");
    IntPoly t_minus_1{{-1, 1}};
    PolySeriesK prod_phi = constant_series(IntPoly::one(), orders);
    PolySeriesK prod_fac = prod_phi;
    for (int i = 0; i < k; ++i) {
        PolySeriesK phi_i = embed(branch_series(orders[i]), i, orders);
        prod_phi = mul(prod_phi, phi_i);
        prod_fac = mul(prod_fac, add(constant_series(IntPoly::one(), orders),
                                     mul(t_minus_1, phi_i)));
    }
    // t - prod(1 + (t-1) phi_i) is divisible by (t-1) coefficientwise
    PolySeriesK den = sub(constant_series(IntPoly::monomial(1), orders), prod_fac);
    PolySeriesK den_reduced(orders);
    for (const auto& [e, p] : den.coeffs) den_reduced.coeffs[e] = divide_by_t_minus_1(p);
    return mul(prod_phi, inverse(den_reduced));
}

PolySeriesK newcomb_series(const std::vector<int>& orders) {
    int k = static_cast<int>(orders.size());
    if (k < 1) throw invalid_input_error("series: need at least one variable");
    IntPoly t_minus_1{{-1, 1}};
    PolySeriesK prod_fac = constant_series(IntPoly::one(), orders);
    for (int i = 0; i < k; ++i) {
        PolySeries1 y(orders[i]);
        y.coeffs[1] = IntPoly::one();
        PolySeriesK y_i = embed(y, i, orders);
        prod_fac = mul(prod_fac, add(constant_series(IntPoly::one(), orders),
                                     mul(t_minus_1, y_i)));
    }
    PolySeriesK den = sub(constant_series(IntPoly::monomial(1), orders), prod_fac);
    PolySeriesK den_reduced(orders);
    for (const auto& [e, p] : den.coeffs) den_reduced.coeffs[e] = divide_by_t_minus_1(p);
    return inverse(den_reduced);
}

FSeriesBundle fa_fh_ft_series(const std::vector<int>& orders) {
    int k = static_cast<int>(orders.size());
    if (k < 1) throw invalid_input_error("series: need at least one variable");
    int n1 = *std::max_element(orders.begin(), orders.end());
    IntPoly t = IntPoly::monomial(1);

    // F = (x + tF)^2 / (1 - x - tF), solved by fixed point from F = 0
    PolySeries1 x(n1), one(n1);
    x.coeffs[1] = IntPoly::one();
    one.coeffs[0] = IntPoly::one();
    PolySeries1 fa(n1);
    for (int it = 0; it <= n1; ++it) {
        PolySeries1 num = add(x, mul(t, fa));
        fa = mul(mul(num, num), inverse(sub(one, num)));
    }
    {
        PolySeries1 num = add(x, mul(t, fa));
        if (fa != mul(mul(num, num), inverse(sub(one, num))))
            throw cross_check_error("series: fixed point did not converge");
    }

    // xi_i = x_i + t F(t, x_i)
    PolySeriesK prod_xi = constant_series(IntPoly::one(), orders);
    PolySeriesK prod_1mxi = prod_xi;
    for (int i = 0; i < k; ++i) {
        PolySeries1 xi1(orders[i]);
        for (int m = 0; m <= orders[i]; ++m) xi1.coeffs[m] = t * fa.coeffs[m];
        xi1.coeffs[1] += IntPoly::one();
        PolySeriesK xi = embed(xi1, i, orders);
        prod_xi = mul(prod_xi, xi);
        prod_1mxi = mul(prod_1mxi, sub(constant_series(IntPoly::one(), orders), xi));
    }
    // (t+1) prod(1 - xi_i) - t has unit constant term
    PolySeriesK den = sub(mul(IntPoly{{1, 1}}, prod_1mxi),
                          constant_series(IntPoly::monomial(1), orders));
    PolySeriesK den_inv = inverse(den);
    PolySeriesK ft = mul(prod_xi, den_inv);
    PolySeriesK fh = mul(sub(constant_series(IntPoly::one(), orders), prod_1mxi), den_inv);
    return {fa, ft, fh};
}

Graph path_like_graph(const Graph& a, int a_mark, const Graph& b, int b_mark, int n) {
    if (a_mark < 1 || a_mark > a.n || b_mark < 1 || b_mark > b.n)
        throw invalid_input_error("path_like_graph: mark out of range");
    int n0 = (a.n - 1) + (b.n - 1);
    if (n <= n0) throw invalid_input_error("path_like_graph: too few vertices");
    int path_len = n - n0;  // vertices on the connecting path, marks included
    Graph g(n);
    // a's vertices keep labels 1..a.n with a_mark as the path's first vertex
    std::vector<int> amap(a.n + 1), bmap(b.n + 1);
    for (int v = 1; v <= a.n; ++v) amap[v] = v;
    int next = a.n;
    // interior path vertices
    std::vector<int> path{amap[a_mark]};
    for (int i = 0; i < path_len - 2; ++i) path.push_back(++next);
    if (path_len == 1) {
        bmap[b_mark] = amap[a_mark];  // marks coincide
    } else {
        bmap[b_mark] = ++next;
        path.push_back(bmap[b_mark]);
    }
    for (int v = 1; v <= b.n; ++v)
        if (v != b_mark) bmap[v] = ++next;
    for (auto [u, v] : a.edges()) g.add_edge(amap[u], amap[v]);
    for (auto [u, v] : b.edges()) g.add_edge(bmap[u], bmap[v]);
    for (size_t i = 0; i + 1 < path.size(); ++i) g.add_edge(path[i], path[i + 1]);
    return g;
}

std::vector<IntPoly> g_polynomial(const Graph& a, int a_mark, const Graph& b, int b_mark) {
    int n0 = (a.n - 1) + (b.n - 1);
    if (n0 > 8) throw resource_cap_error("g_polynomial: too many attached vertices");
    if (!a.is_connected() || !b.is_connected())
        throw invalid_input_error("g_polynomial: pieces must be connected");

    auto h_of = [&](int n) {
        return h_via_descents(graphical_building(path_like_graph(a, a_mark, b, b_mark, n)));
    };

    // unknowns: coefficient j of g_i, for 0 <= j <= i <= n0
    std::vector<std::pair<int, int>> vars;
    for (int i = 0; i <= n0; ++i)
        for (int j = 0; j <= i; ++j) vars.emplace_back(i, j);
    int u = static_cast<int>(vars.size());

    std::vector<std::vector<mpq_class>> rows;
    for (int n = n0 + 1; n <= 2 * n0 + 2; ++n) {
        IntPoly h = h_of(n);
        for (int m = 0; m < n; ++m) {
            std::vector<mpq_class> row(u + 1, 0);
            for (int v = 0; v < u; ++v) {
                auto [i, j] = vars[v];
                if (m >= j) row[v] = narayana_polynomial(n - i).coeff(m - j);
            }
            row[u] = h.coeff(m);
            rows.push_back(std::move(row));
        }
    }

    // Gaussian elimination; the system must be consistent with full rank
    int rank = 0;
    for (int col = 0; col < u && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            mpq_class factor = rows[r][col] / rows[rank][col];
            for (int c2 = col; c2 <= u; ++c2) rows[r][c2] -= factor * rows[rank][c2];
        }
        ++rank;
    }
    if (rank != u) throw cross_check_error("g_polynomial: expansion not uniquely determined");
    std::vector<mpq_class> sol(u);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        int lead = -1;
        for (int c2 = 0; c2 < u; ++c2)
            if (rows[r][c2] != 0) {
                lead = c2;
                break;
            }
        if (lead < 0) {
            if (rows[r][u] != 0) throw cross_check_error("g_polynomial: inconsistent system");
            continue;
        }
        sol[lead] = rows[r][u] / rows[r][lead];
    }

    std::vector<IntPoly> g(n0 + 1);
    for (int v = 0; v < u; ++v) {
        auto [i, j] = vars[v];
        mpq_class q = sol[v];
        q.canonicalize();
        if (q.get_den() != 1) throw cross_check_error("g_polynomial: non-integer coefficient");
        g[i] += IntPoly::monomial(j) * Int(q.get_num());
    }
    for (int i = 0; i <= n0; ++i) {
        if (g[i].degree() > i) throw cross_check_error("g_polynomial: degree bound violated");
        if (!(g[i] == IntPoly{}) && !g[i].is_palindromic(i))
            throw cross_check_error("g_polynomial: coefficient not palindromic");
    }

    // held-out verification on one extra family member
    int n = 2 * n0 + 3;
    IntPoly expect;
    for (int i = 0; i <= n0; ++i) expect += g[i] * narayana_polynomial(n - i);
    if (expect != h_of(n)) throw cross_check_error("g_polynomial: held-out check failed");
    return g;
}

}  // namespace nesto
