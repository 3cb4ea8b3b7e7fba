#include "quadf2/singer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace quadf2::singer {

namespace {

int ceil_div2(int a)
{
    // ceil(a / 2) for any sign of a
    return (a >= 0) ? (a + 1) / 2 : -((-a) / 2);
}

std::pair<int, int> xy_exponents(const Monomial& m)
{
    int a = 0, b = 0;
    for (const auto& [var, exp] : m) {
        if (var == kVarX)
            a = exp;
        else if (var == kVarY)
            b = exp;
    }
    return {a, b};
}

}  // namespace

HPolynomial h_polynomial(int excess)
{
    if (excess < 0)
        throw NegativeExcess("h_polynomial: excess must be nonnegative");
    static std::vector<PolyF2> cache{PolyF2::one()};  // h_0 = 1
    const PolyF2 a1 = PolyF2::variable(kAlpha1);
    const PolyF2 a2 = PolyF2::variable(kAlpha2);
    while (static_cast<int>(cache.size()) <= excess) {
        int e = static_cast<int>(cache.size()) - 1;  // h_{e+1} next
        PolyF2 next = a1 * cache[e];
        if (e - 2 >= 0)
            next += a2 * cache[e - 2];
        cache.push_back(std::move(next));
    }
    return {excess, cache[excess]};
}

PolyF2 h_image(int i, int j)
{
    IndexPair p{i, j};
    if (!in_s(p))
        throw NotInS("h_image: " + to_string(p) + " is not in S");
    const PolyF2 x = PolyF2::variable(kVarX);
    const PolyF2 y = PolyF2::variable(kVarY);
    const PolyF2 x2y = PolyF2::variable(kVarX, 2) * y;

    PolyF2 body = h_polynomial(p.excess()).body;
    PolyF2 image = body.substitute({{kAlpha1, x + y}, {kAlpha2, x2y}});
    return image * x2y.pow(j);
}

int f_gamma(const IndexPair& s, const IndexPair& t)
{
    if (!in_s(s))
        throw BadMembership("f_gamma: " + to_string(s) + " is not in S");
    if (in_s(t))
        throw BadMembership("f_gamma: " + to_string(t) + " is not in S'");
    if (s.degree() != t.degree())
        return 0;
    return binom_mod2(t.j - s.j - 1, t.j + s.j - t.i - 1);
}

std::vector<IndexPair> f_row_support(const IndexPair& s)
{
    if (!in_s(s))
        throw NotInS("f_row_support: " + to_string(s) + " is not in S");
    std::vector<IndexPair> out;
    for (int m = ceil_div2(s.i + 1); m <= s.i - s.j; ++m) {
        IndexPair t{s.i + s.j - m, m};
        if (!in_s(t))
            out.push_back(t);
    }
    return out;
}

std::vector<IndexPair> f_col_support(const IndexPair& t)
{
    if (in_s(t))
        throw NotInS("f_col_support: " + to_string(t) + " is not in S'");
    std::vector<IndexPair> out;
    for (int j = t.i - t.j + 1; j <= t.j - 1; ++j) {
        IndexPair s{t.i + t.j - j, j};
        if (in_s(s))
            out.push_back(s);
    }
    return out;
}

AdmissibleSpec gamma_spec()
{
    AdmissibleSpec spec;
    spec.index_degree = [](int k) { return k; };
    spec.in_s = [](const IndexPair& p) { return in_s(p); };
    spec.coeff = [](const IndexPair& s, const IndexPair& t) {
        if (!in_s(s) || in_s(t))
            return false;
        return f_gamma(s, t) != 0;
    };
    spec.row_support = [](const IndexPair& s) { return f_row_support(s); };
    spec.col_support = [](const IndexPair& t) { return f_col_support(t); };
    spec.sigma = [](int n) { return 1 - n; };
    spec.sigma_inv = spec.sigma;
    return spec;
}

AdmissibleSpec gamma_plus_spec()
{
    return restrict_spec(gamma_spec(), [](int n) { return n >= 0; });
}

CrossValidateReport f_cross_validate(int max_excess, int max_abs_j)
{
    CrossValidateReport report;
    for (int e = 0; e <= max_excess; ++e) {
        for (int j = -max_abs_j; j <= max_abs_j; ++j) {
            IndexPair s{e + 2 * j, j};
            ++report.rows_checked;

            std::set<IndexPair> image_sprime;
            bool s_monomial_ok = false;
            bool spurious_s_monomial = false;
            PolyF2 image = h_image(s.i, s.j);
            for (const auto& mono : image.terms()) {
                auto [a, b] = xy_exponents(mono);
                IndexPair t{a, b};
                if (in_s(t)) {
                    if (t == s)
                        s_monomial_ok = true;
                    else
                        spurious_s_monomial = true;
                } else {
                    image_sprime.insert(t);
                }
            }
            if (!s_monomial_ok || spurious_s_monomial)
                report.mismatches.emplace_back(s, s);

            std::set<IndexPair> expected;
            for (const auto& t : f_row_support(s))
                if (f_gamma(s, t))
                    expected.insert(t);

            for (const auto& t : image_sprime)
                if (!expected.count(t))
                    report.mismatches.emplace_back(s, t);
            for (const auto& t : expected)
                if (!image_sprime.count(t))
                    report.mismatches.emplace_back(s, t);
        }
    }
    return report;
}

}  // namespace quadf2::singer
