#include "quadf2/additive.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "quadf2/gf2.hpp"

namespace quadf2::bialg {

TensorAlgebraCtx TensorAlgebraCtx::standard(int n)
{
    TensorAlgebraCtx ctx;
    ctx.u_ids.resize(n);
    std::iota(ctx.u_ids.begin(), ctx.u_ids.end(), 1);
    return ctx;
}

AdditivePoly AdditivePoly::generic(int height, int var_base)
{
    std::vector<int> ids(height);
    std::iota(ids.begin(), ids.end(), var_base + 1);
    return generic(height, ids);
}

AdditivePoly AdditivePoly::generic(int height, const std::vector<int>& var_ids)
{
    assert(static_cast<int>(var_ids.size()) >= height);
    AdditivePoly p;
    p.coeffs.push_back(PolyF2::one());
    for (int i = 1; i <= height; ++i)
        p.coeffs.push_back(PolyF2::variable(var_ids[i - 1]));
    return p;
}

AdditivePoly compose_additive(const AdditivePoly& outer,
                              const AdditivePoly& inner, int truncation)
{
    if (truncation < 0)
        throw std::invalid_argument("truncation must be nonnegative");
    AdditivePoly result;
    result.coeffs.assign(truncation + 1, PolyF2::zero());
    for (int i = 0; i <= outer.height() && i <= truncation; ++i) {
        for (int j = 0; j <= inner.height() && i + j <= truncation; ++j)
            result.coeffs[i + j] +=
                outer.coeffs[i] * inner.coeffs[j].frobenius(i);
    }
    return result;
}

std::vector<PolyF2> diagonal(int n, int p, int q, int first_base,
                             int second_base)
{
    if (p < 0 || q < 0 || p + q != n)
        throw BadSplit("diagonal: split does not sum to n");
    AdditivePoly inner = AdditivePoly::generic(p, first_base);
    AdditivePoly outer = AdditivePoly::generic(q, second_base);
    AdditivePoly comp = compose_additive(outer, inner, n);
    return {comp.coeffs.begin() + 1, comp.coeffs.end()};
}

std::vector<PolyF2> iterated_diagonal_images(int n,
                                             const TensorAlgebraCtx& ctx)
{
    if (ctx.factors() < n)
        throw BadIndex("iterated_diagonal_images: ctx has too few factors");
    AdditivePoly acc = AdditivePoly::generic(1, std::vector<int>{ctx.u(1)});
    for (int t = 2; t <= n; ++t) {
        AdditivePoly outer =
            AdditivePoly::generic(1, std::vector<int>{ctx.u(t)});
        acc = compose_additive(outer, acc, n);
    }
    if (n == 0)
        acc = AdditivePoly::identity();
    acc.coeffs.resize(n + 1, PolyF2::zero());
    return {acc.coeffs.begin() + 1, acc.coeffs.end()};
}

PolyF2 partial_counit(int n, int a, const PolyF2& element)
{
    if (a < 1 || a > n)
        throw BadIndex("partial_counit: factor index out of range");
    auto images = iterated_diagonal_images(n, TensorAlgebraCtx::standard(n));
    std::map<int, PolyF2> assignment;
    for (int k = 1; k <= n; ++k)
        assignment[alpha_var(k)] = images[k - 1];
    PolyF2 expanded = element.substitute(assignment);
    return expanded.substitute({{a, PolyF2::zero()}});
}

namespace {

// monomials of total degree d in the variables 1..num_vars, lex sorted
std::vector<Monomial> degree_monomials(int num_vars, int degree)
{
    std::vector<Monomial> out;
    Monomial current;
    // assign exponent to each variable in turn
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var > num_vars) {
            if (remaining == 0)
                out.push_back(current);
            return;
        }
        if (var == num_vars) {
            if (remaining > 0)
                current.emplace_back(var, remaining);
            out.push_back(current);
            if (remaining > 0)
                current.pop_back();
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            if (e > 0)
                current.emplace_back(var, e);
            rec(var + 1, remaining - e);
            if (e > 0)
                current.pop_back();
        }
    };
    if (num_vars == 0) {
        if (degree == 0)
            out.push_back({});
        return out;
    }
    rec(1, degree);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t monomial_column(const std::vector<Monomial>& columns,
                            const Monomial& m)
{
    auto it = std::lower_bound(columns.begin(), columns.end(), m);
    assert(it != columns.end() && *it == m);
    return static_cast<std::size_t>(it - columns.begin());
}

}  // namespace

F2Matrix subalgebra_degree_slice(
    const std::vector<std::pair<PolyF2, int>>& generators, int num_vars,
    int degree)
{
    auto columns = degree_monomials(num_vars, degree);
    F2Matrix mat(columns.size());

    std::function<void(std::size_t, int, const PolyF2&)> rec =
        [&](std::size_t idx, int remaining, const PolyF2& acc) {
            if (remaining == 0) {
                std::size_t r = mat.add_row();
                for (const auto& term : acc.terms())
                    mat.set(r, monomial_column(columns, term));
                return;
            }
            if (idx == generators.size())
                return;
            const auto& [gen, gdeg] = generators[idx];
            assert(gdeg > 0);
            PolyF2 power_acc = acc;
            for (int e = 0; e * gdeg <= remaining; ++e) {
                if (e > 0)
                    power_acc *= gen;
                rec(idx + 1, remaining - e * gdeg, power_acc);
            }
        };
    rec(0, degree, PolyF2::one());
    mat.rref();
    return mat;
}

long long bplus_dimension(int n, int degree)
{
    std::function<long long(int, int)> rec = [&](int i, int remaining) {
        if (remaining < 0)
            return 0LL;
        if (i > n)
            return remaining == 0 ? 1LL : 0LL;
        long long total = 0;
        int d = alpha_degree(i);
        for (int e = 0; e * d <= remaining; ++e)
            total += rec(i + 1, remaining - e * d);
        return total;
    };
    return rec(1, degree);
}

std::vector<QuadraticityRecord> quadraticity_check(int n,
                                                   int max_internal_degree)
{
    if (n < 2)
        throw std::invalid_argument("quadraticity_check: n must be >= 2");

    auto images_in = [&](int lo, int hi) {
        TensorAlgebraCtx ctx;
        for (int t = lo; t <= hi; ++t)
            ctx.u_ids.push_back(t);
        return iterated_diagonal_images(hi - lo + 1, ctx);
    };

    std::vector<std::pair<PolyF2, int>> left_gens, right_gens, bn_gens;
    auto first = images_in(1, n - 1);
    for (int i = 1; i <= n - 1; ++i)
        left_gens.emplace_back(first[i - 1], alpha_degree(i));
    left_gens.emplace_back(PolyF2::variable(n), 1);

    right_gens.emplace_back(PolyF2::variable(1), 1);
    auto second = images_in(2, n);
    for (int i = 1; i <= n - 1; ++i)
        right_gens.emplace_back(second[i - 1], alpha_degree(i));

    auto full = images_in(1, n);
    for (int i = 1; i <= n; ++i)
        bn_gens.emplace_back(full[i - 1], alpha_degree(i));

    std::vector<QuadraticityRecord> out;
    for (int d = 0; d <= max_internal_degree; ++d) {
        QuadraticityRecord rec;
        rec.degree = d;
        F2Matrix left = subalgebra_degree_slice(left_gens, n, d);
        F2Matrix right = subalgebra_degree_slice(right_gens, n, d);
        F2Matrix bn = subalgebra_degree_slice(bn_gens, n, d);
        rec.dim_left = left.row_count();
        rec.dim_right = right.row_count();
        F2Matrix inter = intersect_rowspaces(left, right);
        rec.dim_intersection = inter.row_count();
        rec.dim_bn = bn.row_count();
        rec.contains_bn = true;
        for (std::size_t r = 0; r < bn.row_count(); ++r)
            if (!inter.reduced_contains(bn.packed_row(r)))
                rec.contains_bn = false;
        rec.equal = rec.contains_bn && rec.dim_intersection == rec.dim_bn;
        out.push_back(rec);
    }
    return out;
}

std::vector<PolyF2> q_coordinate_coproduct(int n, int p, int q)
{
    if (p < 0 || q < 0 || p + q != n)
        throw BadSplit("q_coordinate_coproduct: split does not sum to n");
    auto diag = diagonal(n, p, q);
    const PolyF2& alpha_n_image = diag[n - 1];
    assert(alpha_n_image.is_monomial());
    PolyF2 inv = alpha_n_image.inverse_monomial();

    std::map<int, PolyF2> to_q;
    auto add_factor = [&to_q](int alpha_base, int q_base, int height) {
        if (height == 0)
            return;
        PolyF2 q0_inv = PolyF2::variable(q_base, -1);
        for (int t = 1; t < height; ++t)
            to_q[alpha_base + t] = PolyF2::variable(q_base + t) * q0_inv;
        to_q[alpha_base + height] = q0_inv;
    };
    add_factor(kFirstFactorBase, kFirstFactorQBase, p);
    add_factor(kSecondFactorBase, kSecondFactorQBase, q);

    std::vector<PolyF2> out;
    for (int i = 0; i < n; ++i) {
        PolyF2 numerator = (i == 0) ? PolyF2::one() : diag[i - 1];
        out.push_back((numerator * inv).substitute(to_q));
    }
    return out;
}

PolyF2 theta(int n, const std::map<int, int>& xi_monomial)
{
    PolyF2 out = PolyF2::one();
    for (const auto& [index, exponent] : xi_monomial) {
        if (exponent == 0)
            continue;
        if (index > n)
            return PolyF2::zero();
        out *= PolyF2::variable(alpha_var(index), exponent);
    }
    return out;
}

std::vector<PolyF2> milnor_coproduct(int n)
{
    AdditivePoly inner = AdditivePoly::generic(n, kFirstFactorBase);
    AdditivePoly outer = AdditivePoly::generic(n, kSecondFactorBase);
    AdditivePoly comp = compose_additive(outer, inner, n);
    return {comp.coeffs.begin() + 1, comp.coeffs.end()};
}

}  // namespace quadf2::bialg
