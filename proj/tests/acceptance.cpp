// End-to-end acceptance battery.  Each numbered check prints exactly one
// pass/fail line; the process exits nonzero if any check fails.  All
// comparisons are bit-exact.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "quadf2/additive.hpp"
#include "quadf2/gf2.hpp"
#include "quadf2/quadratic.hpp"
#include "quadf2/singer.hpp"
#include "quadf2/steenrod.hpp"

using namespace quadf2;

namespace {

int failures = 0;

void record(int number, const char* title, bool ok, double seconds)
{
    std::printf("%2d. %-46s %s  (%.2fs)\n", number, title,
                ok ? "pass" : "FAIL", seconds);
    if (!ok)
        ++failures;
}

template <typename Fn>
void criterion(int number, const char* title, Fn&& fn)
{
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion %d threw: %s\n", number, e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    record(number, title, ok, secs);
}

bool expansion_oracle()
{
    auto report = singer::f_cross_validate(24, 8);
    return report.pass() && report.rows_checked == 25u * 17u;
}

bool strict_self_duality()
{
    return check_strict_self_dual(singer::gamma_spec(), Window{-15, 15}).ok;
}

bool adem_forms()
{
    // first published shape y_{2k-1-n} y_k = sum_j binom(n-1-j, j)
    // y_{2k-1-j} y_{k+j-n}, versus the (u, v) shape used internally
    for (int n = -12; n <= 12; ++n) {
        for (int k = -12; k <= 12; ++k) {
            int u = 2 * k - 1 - n;
            int v = k;
            if (u >= 2 * v)
                continue;
            steenrod::QElement first_form;
            for (int j = -40; j <= 40; ++j)
                if (binom_mod2(n - 1 - j, j))
                    first_form.toggle({2 * k - 1 - j, k + j - n});
            if (!(first_form == steenrod::adem_expand(u, v)))
                return false;
        }
    }

    // clipped expansion versus the classical nonnegative Adem sum
    for (int v = 1; 2 * v <= 20; ++v) {
        for (int u = 0; u < 2 * v; ++u) {
            steenrod::QElement classical;
            for (int c = 0; 2 * c <= u; ++c)
                if (binom_mod2(v - c - 1, u - 2 * c))
                    classical.toggle({u + v - c, c});
            if (!(steenrod::atilde_normalize_clipped({u, v}) == classical))
                return false;
        }
    }
    return true;
}

bool confluence_and_termination()
{
    std::mt19937 rng(20240214);
    std::uniform_int_distribution<int> len_dist(1, 4);
    std::uniform_int_distribution<int> idx_dist(-6, 12);
    for (int trial = 0; trial < 1000; ++trial) {
        steenrod::QMonomial m(len_dist(rng));
        for (auto& a : m)
            a = idx_dist(rng);
        steenrod::NormalizeStats left_stats, right_stats;
        auto left = steenrod::normalize(m, steenrod::Strategy::leftmost,
                                        100000, &left_stats);
        auto right = steenrod::normalize(m, steenrod::Strategy::rightmost,
                                         100000, &right_stats);
        if (!(left == right))
            return false;
        if (left_stats.steps >= 100000 || right_stats.steps >= 100000)
            return false;
    }
    return true;
}

bool weak_copbw()
{
    auto spec = singer::gamma_plus_spec();
    Window window{0, 40};
    CoalgebraSlices slices(spec, window);
    for (int n = 2; n <= 4; ++n) {
        for (int d = 0; d <= 40; ++d) {
            auto rec = weak_copbw_check(slices, spec, n, d);
            if (!rec.pass)
                return false;
        }
    }
    return true;
}

bool quadraticity()
{
    for (int n = 3; n <= 4; ++n)
        for (const auto& rec : bialg::quadraticity_check(n, 25))
            if (!rec.equal)
                return false;
    return true;
}

bool degree_two_identification()
{
    auto report = steenrod::relations_match_f(Window{-15, 15});
    return report.pass() && report.pairs_checked == 31u * 31u;
}

bool reciprocity()
{
    auto spec = singer::gamma_spec();
    Window window{-12, 12};
    auto nat = [](int k) { return k >= 0; };
    if (!reciprocity_check(spec, nat, window).agree)
        return false;

    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> idx_dist(-10, 10);
    std::uniform_int_distribution<int> size_dist(1, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::set<int> members;
        int size = size_dist(rng);
        for (int c = 0; c < size; ++c)
            members.insert(idx_dist(rng));
        auto J = [&members](int k) { return members.count(k) > 0; };
        if (!reciprocity_check(spec, J, window).agree)
            return false;
    }
    return true;
}

bool perp_examples()
{
    std::vector<std::string> labels{"x*x", "x*y", "y*x", "y*y"};

    F2Matrix r(labels);
    r.add_row();
    r.set(0, 1);
    r.add_row();
    r.set(1, 2);
    F2Matrix rp = perp(r);
    if (rp.row_count() != 2)
        return false;
    // eta_x (x) eta_x and eta_y (x) eta_y, nothing else
    if (!(rp.get(0, 0) && !rp.get(0, 1) && !rp.get(0, 2) && !rp.get(0, 3)))
        return false;
    if (!(rp.get(1, 3) && !rp.get(1, 0) && !rp.get(1, 1) && !rp.get(1, 2)))
        return false;

    F2Matrix t(labels);
    t.add_row();
    t.set(0, 0);
    t.add_row();
    t.set(1, 1);
    F2Matrix tp = perp(t);
    if (tp.row_count() != 2)
        return false;
    // eta_y (x) eta_x and eta_y (x) eta_y
    if (!(tp.get(0, 2) && !tp.get(0, 0) && !tp.get(0, 1) && !tp.get(0, 3)))
        return false;
    if (!(tp.get(1, 3) && !tp.get(1, 0) && !tp.get(1, 1) && !tp.get(1, 2)))
        return false;

    std::mt19937 rng(808);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        F2Matrix m(labels);
        int rows = 1 + trial % 4;
        for (int rr = 0; rr < rows; ++rr) {
            std::size_t row = m.add_row();
            for (std::size_t c = 0; c < 4; ++c)
                if (bit(rng))
                    m.set(row, c);
        }
        m.rref();
        F2Matrix twice = perp(perp(m));
        twice.rref();
        if (twice.row_count() != m.row_count())
            return false;
        for (std::size_t rr = 0; rr < m.row_count(); ++rr)
            if (!twice.reduced_contains(m.packed_row(rr)))
                return false;
    }
    return true;
}

bool milnor_cross_check()
{
    auto images = bialg::milnor_coproduct(5);
    for (int k = 1; k <= 5; ++k) {
        PolyF2 expected;
        for (int i = 0; i <= k; ++i) {
            int j = k - i;
            PolyF2 first =
                j == 0 ? PolyF2::one()
                       : PolyF2::variable(bialg::kFirstFactorBase + j);
            PolyF2 second =
                i == 0 ? PolyF2::one()
                       : PolyF2::variable(bialg::kSecondFactorBase + i);
            expected += first.frobenius(i) * second;
        }
        if (!(images[k - 1] == expected))
            return false;
    }
    return true;
}

bool comonoid_axioms()
{
    for (int n = 2; n <= 5; ++n) {
        // counit laws: the trivial splits fix the generators
        auto left_unit = bialg::diagonal(n, 0, n);
        auto right_unit = bialg::diagonal(n, n, 0);
        for (int k = 1; k <= n; ++k) {
            if (!(left_unit[k - 1] ==
                  PolyF2::variable(bialg::kSecondFactorBase + k)))
                return false;
            if (!(right_unit[k - 1] ==
                  PolyF2::variable(bialg::kFirstFactorBase + k)))
                return false;
        }

        // coassociativity across every three-way split
        for (int p = 0; p <= n; ++p) {
            for (int q = 0; p + q <= n; ++q) {
                int r = n - p - q;

                auto outer_left = bialg::diagonal(n, p + q, r);
                auto refine_left = bialg::diagonal(p + q, p, q, 1000, 2000);
                std::map<int, PolyF2> sub_left;
                for (int k = 1; k <= p + q; ++k)
                    sub_left[bialg::kFirstFactorBase + k] =
                        refine_left[k - 1];
                for (int k = 1; k <= n; ++k)
                    sub_left[bialg::kSecondFactorBase + k] =
                        PolyF2::variable(3000 + k);

                auto outer_right = bialg::diagonal(n, p, q + r);
                auto refine_right =
                    bialg::diagonal(q + r, q, r, 2000, 3000);
                std::map<int, PolyF2> sub_right;
                for (int k = 1; k <= n; ++k)
                    sub_right[bialg::kFirstFactorBase + k] =
                        PolyF2::variable(1000 + k);
                for (int k = 1; k <= q + r; ++k)
                    sub_right[bialg::kSecondFactorBase + k] =
                        refine_right[k - 1];

                for (int s = 1; s <= n; ++s) {
                    PolyF2 lhs = outer_left[s - 1].substitute(sub_left);
                    PolyF2 rhs = outer_right[s - 1].substitute(sub_right);
                    if (!(lhs == rhs))
                        return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

int main()
{
    criterion(1, "expansion oracle matches the closed form",
              expansion_oracle);
    criterion(2, "strict self-duality on the index window",
              strict_self_duality);
    criterion(3, "relation forms and classical Adem sums", adem_forms);
    criterion(4, "confluence and termination, 1000 samples",
              confluence_and_termination);
    criterion(5, "weak coPBW through length 4, degree 40", weak_copbw);
    criterion(6, "quadraticity for 3 and 4 generators", quadraticity);
    criterion(7, "degree-two identification with the dual",
              degree_two_identification);
    criterion(8, "pullback/pushforward reciprocity", reciprocity);
    criterion(9, "annihilator examples and double perp", perp_examples);
    criterion(10, "power-series coproduct of the dual generators",
              milnor_cross_check);
    criterion(11, "comonoid axioms through five factors", comonoid_axioms);

    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 11 criteria passed\n");
    return 0;
}
