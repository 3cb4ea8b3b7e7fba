#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "quadf2/quadratic.hpp"
#include "quadf2/singer.hpp"

using namespace quadf2;

namespace {

// tiny spec with exactly two mirrored nonzero coefficients; strictly
// self-dual under n -> 1 - n, but neither the naturals nor their sigma
// image pull back admissibly
AdmissibleSpec planted_spec()
{
    AdmissibleSpec spec;
    spec.index_degree = [](int k) { return k; };
    spec.in_s = [](const IndexPair& p) { return p.i >= 2 * p.j; };
    auto entry = [](const IndexPair& s, const IndexPair& t) {
        return (s == IndexPair{1, 0} && t == IndexPair{-1, 2}) ||
               (s == IndexPair{2, -1} && t == IndexPair{0, 1});
    };
    spec.coeff = entry;
    spec.row_support = [entry](const IndexPair& s) {
        std::vector<IndexPair> out;
        for (const auto& t : {IndexPair{-1, 2}, IndexPair{0, 1}})
            if (entry(s, t))
                out.push_back(t);
        return out;
    };
    spec.col_support = [entry](const IndexPair& t) {
        std::vector<IndexPair> out;
        for (const auto& s : {IndexPair{1, 0}, IndexPair{2, -1}})
            if (entry(s, t))
                out.push_back(s);
        return out;
    };
    spec.sigma = [](int n) { return 1 - n; };
    spec.sigma_inv = spec.sigma;
    return spec;
}

}  // namespace

TEST_CASE("relation vector lists the unit coefficients")
{
    auto spec = singer::gamma_spec();
    auto rv = relation_vector(spec, {3, 0});
    REQUIRE(rv.support.size() == 2);
    CHECK(rv.support[0] == IndexPair{0, 3});
    CHECK(rv.support[1] == IndexPair{1, 2});

    CHECK_THROWS_AS(relation_vector(spec, {1, 2}), NotInS);
}

TEST_CASE("transpose dual swaps everything and is an involution")
{
    auto spec = singer::gamma_spec();
    auto dual = transpose_dual(spec);
    auto twice = transpose_dual(dual);

    for (int i = -4; i <= 4; ++i) {
        for (int j = -4; j <= 4; ++j) {
            IndexPair p{i, j};
            CHECK(dual.in_s(p) == !spec.in_s(p));
            CHECK(twice.in_s(p) == spec.in_s(p));
            for (int l = -4; l <= 4; ++l) {
                IndexPair q{l, i + j - l};
                if (spec.in_s(p) && !spec.in_s(q)) {
                    CHECK(dual.coeff(q, p) == spec.coeff(p, q));
                    CHECK(twice.coeff(p, q) == spec.coeff(p, q));
                }
            }
        }
    }

    AdmissibleSpec no_col = spec;
    no_col.col_support = nullptr;
    CHECK_THROWS_AS(transpose_dual(no_col), NotDualizable);
}

TEST_CASE("support enumerators survive a brute-force audit")
{
    audit_supports(singer::gamma_spec(), Window{-8, 8});
    audit_supports(planted_spec(), Window{-5, 5});

    // an enumerator that forgets an entry is a hard error
    auto broken = singer::gamma_spec();
    broken.row_support = [](const IndexPair& s) {
        auto full = singer::f_row_support(s);
        if (!full.empty())
            full.pop_back();
        return full;
    };
    CHECK_THROWS_AS(audit_supports(broken, Window{-6, 6}),
                    std::logic_error);
}

TEST_CASE("admissible word enumeration matches hand counts")
{
    auto spec = singer::gamma_plus_spec();
    Window window{0, 10};

    auto words = enumerate_admissible_words(spec, 3, 7, window);
    std::vector<std::vector<int>> expected{
        {4, 2, 1}, {5, 2, 0}, {6, 1, 0}, {7, 0, 0}};
    CHECK(words == expected);

    CHECK(enumerate_admissible_words(spec, 0, 0, window).size() == 1);
    CHECK(enumerate_admissible_words(spec, 1, 5, window).size() == 1);
    CHECK(enumerate_admissible_words(spec, 2, 3, window).size() == 2);
}

TEST_CASE("degree-two coalgebra slice is spanned by the relation vectors")
{
    auto spec = singer::gamma_plus_spec();
    Window window{0, 12};
    CoalgebraSlices slices(spec, window);
    for (int d = 0; d <= 12; ++d) {
        std::size_t s_count = 0;
        for (int j = 0; 3 * j <= d; ++j) {
            IndexPair s{d - j, j};
            if (singer::in_s(s))
                ++s_count;
        }
        CHECK(slices.slice(2, d).mat.row_count() == s_count);
    }
}

TEST_CASE("weak coPBW holds on small nonnegative slices")
{
    auto spec = singer::gamma_plus_spec();
    Window window{0, 14};
    CoalgebraSlices slices(spec, window);
    for (int n = 2; n <= 3; ++n) {
        for (int d = 0; d <= 14; ++d) {
            auto rec = weak_copbw_check(slices, spec, n, d);
            CHECK(rec.pass);
            CHECK(rec.coalgebra_dim == rec.admissible_count);
        }
    }
}

TEST_CASE("pullback and pushforward admissibility witnesses")
{
    auto spec = planted_spec();
    Window window{-5, 5};
    auto nat = [](int k) { return k >= 0; };

    auto pull = check_pullback_admissible(spec, nat, window);
    REQUIRE(!pull.ok);
    CHECK(pull.witness->first == IndexPair{1, 0});
    CHECK(pull.witness->second == IndexPair{-1, 2});

    auto le_one = [](int k) { return k <= 1; };  // sigma image of N
    auto push = check_pushforward_admissible(spec, le_one, window);
    REQUIRE(!push.ok);
    CHECK(push.witness->first == IndexPair{2, -1});
    CHECK(push.witness->second == IndexPair{0, 1});

    auto all = [](int) { return true; };
    CHECK(check_pullback_admissible(spec, all, window).ok);
    CHECK(check_pushforward_admissible(spec, all, window).ok);
}

TEST_CASE("reciprocity: the two admissibility checks agree under sigma")
{
    Window window{-5, 5};
    auto nat = [](int k) { return k >= 0; };

    auto planted = planted_spec();
    CHECK(check_strict_self_dual(planted, window).ok);
    auto rep = reciprocity_check(planted, nat, window);
    CHECK(!rep.pullback.ok);
    CHECK(!rep.pushforward.ok);
    CHECK(rep.agree);

    auto rep2 = reciprocity_check(singer::gamma_spec(), nat, window);
    CHECK(rep2.pullback.ok);
    CHECK(rep2.pushforward.ok);
    CHECK(rep2.agree);
}

TEST_CASE("strict self-duality holds for the gamma spec, fails when broken")
{
    CHECK(check_strict_self_dual(singer::gamma_spec(), Window{-8, 8}).ok);

    auto broken = planted_spec();
    auto base = broken.coeff;
    broken.coeff = [base](const IndexPair& s, const IndexPair& t) {
        if (s == IndexPair{2, -1})  // drop the mirror entry
            return false;
        return base(s, t);
    };
    broken.row_support = [broken](const IndexPair& s) {
        std::vector<IndexPair> out;
        for (const auto& t : {IndexPair{-1, 2}, IndexPair{0, 1}})
            if (broken.coeff(s, t))
                out.push_back(t);
        return out;
    };
    auto check = check_strict_self_dual(broken, Window{-5, 5});
    CHECK(!check.ok);
    CHECK(check.witness.has_value());
}

TEST_CASE("perp reproduces the two-generator examples")
{
    std::vector<std::string> labels{"x*x", "x*y", "y*x", "y*y"};

    F2Matrix r(labels);
    r.add_row();
    r.set(0, 1);
    r.add_row();
    r.set(1, 2);
    F2Matrix rp = perp(r);
    REQUIRE(rp.row_count() == 2);
    CHECK(rp.get(0, 0));
    CHECK(rp.get(1, 3));
    CHECK(!rp.get(0, 1));
    CHECK(!rp.get(0, 2));
    CHECK(!rp.get(0, 3));
    CHECK(!rp.get(1, 0));
    CHECK(!rp.get(1, 1));
    CHECK(!rp.get(1, 2));

    F2Matrix t(labels);
    t.add_row();
    t.set(0, 0);
    t.add_row();
    t.set(1, 1);
    F2Matrix tp = perp(t);
    REQUIRE(tp.row_count() == 2);
    CHECK(tp.get(0, 2));
    CHECK(tp.get(1, 3));

    F2Matrix zero(labels);
    CHECK(perp(zero).row_count() == 4);
    F2Matrix full(labels);
    for (int c = 0; c < 4; ++c) {
        full.add_row();
        full.set(c, c);
    }
    CHECK(perp(full).row_count() == 0);
}

TEST_CASE("restriction to the naturals gives the nonnegative spec")
{
    auto restricted = singer::gamma_plus_spec();
    CHECK(restricted.index_in_universe(3));
    CHECK(!restricted.index_in_universe(-1));
    CHECK(restricted.coeff({3, 0}, {1, 2}));
    CHECK(!restricted.coeff({3, -1}, {1, 1}));

    // support entries with negative components are filtered out
    for (const auto& t : restricted.row_support({8, -2}))
        CHECK((t.i >= 0 && t.j >= 0));
}

TEST_CASE("surjectivity onto the nonnegative quotient slice")
{
    auto spec = singer::gamma_spec();
    auto nat = [](int k) { return k >= 0; };
    Window window{-5, 20};
    auto report = surjectivity_check(spec, nat, 2, 3, window);
    CHECK(report.pass);
    CHECK(report.ambient_j_count == report.restricted_count);
    CHECK(report.ambient_j_count == 2);  // (3,0) and (2,1)

    auto all = [](int) { return true; };
    CHECK(surjectivity_check(spec, all, 2, 3, Window{-4, 8}).pass);
    CHECK(surjectivity_check(spec, nat, 0, 0, Window{-3, 6}).pass);
}
