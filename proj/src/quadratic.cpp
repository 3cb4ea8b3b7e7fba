#include "quadf2/quadratic.hpp"

#include <algorithm>
#include <sstream>

namespace quadf2 {

std::string to_string(const IndexPair& p)
{
    std::ostringstream os;
    os << "(" << p.i << "," << p.j << ")";
    return os.str();
}

RelationVector relation_vector(const AdmissibleSpec& spec, const IndexPair& s)
{
    if (!spec.in_s(s) || !spec.pair_in_universe(s))
        throw NotInS("relation_vector: " + to_string(s) + " is not in S");
    RelationVector rv{s, {}};
    for (const auto& t : spec.row_support(s)) {
        if (spec.coeff(s, t))
            rv.support.push_back(t);
    }
    std::sort(rv.support.begin(), rv.support.end());
    return rv;
}

AdmissibleSpec transpose_dual(const AdmissibleSpec& spec)
{
    if (!spec.col_support)
        throw NotDualizable("transpose_dual: no column-support enumerator");
    AdmissibleSpec dual;
    dual.index_degree = spec.index_degree;
    dual.in_universe = spec.in_universe;
    dual.in_s = [in_s = spec.in_s](const IndexPair& p) { return !in_s(p); };
    dual.coeff = [coeff = spec.coeff](const IndexPair& sp,
                                      const IndexPair& s) {
        return coeff(s, sp);
    };
    dual.row_support = spec.col_support;
    dual.col_support = spec.row_support;
    dual.sigma = spec.sigma_inv;
    dual.sigma_inv = spec.sigma;
    return dual;
}

void audit_supports(const AdmissibleSpec& spec, const Window& window)
{
    std::vector<int> indices;
    for (int k = window.index_lo; k <= window.index_hi; ++k)
        if (spec.index_in_universe(k))
            indices.push_back(k);

    std::vector<IndexPair> s_pairs, sp_pairs;
    for (int i : indices) {
        for (int j : indices) {
            IndexPair p{i, j};
            (spec.in_s(p) ? s_pairs : sp_pairs).push_back(p);
        }
    }
    for (const auto& s : s_pairs) {
        auto row = spec.row_support(s);
        for (const auto& t : sp_pairs) {
            if (!spec.coeff(s, t))
                continue;
            if (std::find(row.begin(), row.end(), t) == row.end())
                throw std::logic_error("row support of " + to_string(s) +
                                       " misses " + to_string(t));
        }
    }
    if (spec.col_support) {
        for (const auto& t : sp_pairs) {
            auto col = spec.col_support(t);
            for (const auto& s : s_pairs) {
                if (!spec.coeff(s, t))
                    continue;
                if (std::find(col.begin(), col.end(), s) == col.end())
                    throw std::logic_error("column support of " +
                                           to_string(t) + " misses " +
                                           to_string(s));
            }
        }
    }
}

namespace {

void enumerate_words_rec(const AdmissibleSpec& spec, const Window& window,
                         int n, int target, int degree_min, int degree_max,
                         bool require_s, std::vector<int>& prefix,
                         int prefix_degree,
                         std::vector<std::vector<int>>& out)
{
    int remaining = n - static_cast<int>(prefix.size());
    if (remaining == 0) {
        if (prefix_degree == target)
            out.push_back(prefix);
        return;
    }
    long long lo = prefix_degree + static_cast<long long>(remaining) * degree_min;
    long long hi = prefix_degree + static_cast<long long>(remaining) * degree_max;
    if (target < lo || target > hi)
        return;
    for (int a = window.index_lo; a <= window.index_hi; ++a) {
        if (!spec.index_in_universe(a))
            continue;
        if (require_s && !prefix.empty() &&
            !spec.in_s(IndexPair{prefix.back(), a}))
            continue;
        prefix.push_back(a);
        enumerate_words_rec(spec, window, n, target, degree_min, degree_max,
                            require_s, prefix, prefix_degree + spec.index_degree(a),
                            out);
        prefix.pop_back();
    }
}

std::pair<int, int> window_degree_range(const AdmissibleSpec& spec,
                                        const Window& window)
{
    bool any = false;
    int dmin = 0, dmax = 0;
    for (int a = window.index_lo; a <= window.index_hi; ++a) {
        if (!spec.index_in_universe(a))
            continue;
        int d = spec.index_degree(a);
        if (!any) {
            dmin = dmax = d;
            any = true;
        } else {
            dmin = std::min(dmin, d);
            dmax = std::max(dmax, d);
        }
    }
    if (!any)
        throw WindowTooSmall("window contains no indices");
    return {dmin, dmax};
}

std::vector<std::vector<int>> enumerate_words(const AdmissibleSpec& spec,
                                              int n, int degree,
                                              const Window& window,
                                              bool require_s)
{
    std::vector<std::vector<int>> out;
    if (n == 0) {
        if (degree == 0)
            out.push_back({});
        return out;
    }
    auto [dmin, dmax] = window_degree_range(spec, window);
    std::vector<int> prefix;
    enumerate_words_rec(spec, window, n, degree, dmin, dmax, require_s,
                        prefix, 0, out);
    return out;
}

std::size_t word_column(const std::vector<std::vector<int>>& words,
                        const std::vector<int>& w)
{
    auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it == words.end() || *it != w)
        throw WindowTooSmall("word outside the window slice");
    return static_cast<std::size_t>(it - words.begin());
}

}  // namespace

std::vector<std::vector<int>> enumerate_admissible_words(
    const AdmissibleSpec& spec, int n, int degree, const Window& window)
{
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    return enumerate_words(spec, n, degree, window, true);
}

std::vector<std::vector<int>> CoalgebraSlices::word_basis(int n,
                                                          int degree) const
{
    return enumerate_words(spec_, n, degree, window_, false);
}

std::vector<int> CoalgebraSlices::indices_of_degree(int degree) const
{
    std::vector<int> out;
    for (int a = window_.index_lo; a <= window_.index_hi; ++a)
        if (spec_.index_in_universe(a) && spec_.index_degree(a) == degree)
            out.push_back(a);
    return out;
}

const WordSlice& CoalgebraSlices::slice(int n, int degree)
{
    auto key = std::make_pair(n, degree);
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;

    WordSlice ws;
    ws.words = word_basis(n, degree);

    if (n == 0) {
        ws.mat = F2Matrix(ws.words.size());
        if (degree == 0) {
            ws.mat.add_row();
            ws.mat.set(0, 0);
        }
    } else if (n == 1) {
        ws.mat = F2Matrix(ws.words.size());
        for (std::size_t c = 0; c < ws.words.size(); ++c) {
            std::size_t r = ws.mat.add_row();
            ws.mat.set(r, c);
        }
    } else if (n == 2) {
        // relation supports may leave the window; widen the column set to
        // the support closure so every relation vector is representable
        std::vector<RelationVector> rvs;
        std::vector<std::vector<int>> cols = ws.words;
        for (const auto& w : ws.words) {
            IndexPair s{w[0], w[1]};
            if (!spec_.in_s(s))
                continue;
            rvs.push_back(relation_vector(spec_, s));
            for (const auto& t : rvs.back().support)
                cols.push_back({t.i, t.j});
        }
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        ws.words = std::move(cols);
        ws.mat = F2Matrix(ws.words.size());
        for (const auto& rv : rvs) {
            std::size_t r = ws.mat.add_row();
            ws.mat.set(r, word_column(ws.words, {rv.s.i, rv.s.j}));
            for (const auto& t : rv.support)
                ws.mat.set(r, word_column(ws.words, {t.i, t.j}));
        }
        ws.mat.rref();
    } else {
        auto [dmin, dmax] = window_degree_range(spec_, window_);
        std::vector<std::vector<int>> cols;
        for (int g = dmin; g <= dmax; ++g) {
            auto idx = indices_of_degree(g);
            if (idx.empty())
                continue;
            const WordSlice& sub = slice(n - 1, degree - g);
            for (int a : idx) {
                for (const auto& w : sub.words) {
                    std::vector<int> ext = w;
                    ext.push_back(a);
                    cols.push_back(ext);
                    ext = w;
                    ext.insert(ext.begin(), a);
                    cols.push_back(std::move(ext));
                }
            }
        }
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        ws.words = std::move(cols);

        F2Matrix left(ws.words.size());   // C_{n-1} (x) V
        F2Matrix right(ws.words.size());  // V (x) C_{n-1}
        for (int g = dmin; g <= dmax; ++g) {
            auto idx = indices_of_degree(g);
            if (idx.empty())
                continue;
            const WordSlice& sub = slice(n - 1, degree - g);
            for (int a : idx) {
                for (std::size_t r = 0; r < sub.mat.row_count(); ++r) {
                    std::size_t lr = left.add_row();
                    std::size_t rr = right.add_row();
                    for (std::size_t c = 0; c < sub.words.size(); ++c) {
                        if (!sub.mat.get(r, c))
                            continue;
                        std::vector<int> w = sub.words[c];
                        w.push_back(a);
                        left.set(lr, word_column(ws.words, w));
                        w = sub.words[c];
                        w.insert(w.begin(), a);
                        right.set(rr, word_column(ws.words, w));
                    }
                }
            }
        }
        ws.mat = intersect_rowspaces(left, right);
    }

    auto [it, inserted] = cache_.emplace(key, std::move(ws));
    return it->second;
}

CopbwReport weak_copbw_check(CoalgebraSlices& slices,
                             const AdmissibleSpec& spec, int n, int degree)
{
    const WordSlice& sl = slices.slice(n, degree);
    auto admissible =
        enumerate_admissible_words(spec, n, degree, slices.window());

    CopbwReport report;
    report.n = n;
    report.degree = degree;
    report.admissible_count = admissible.size();

    F2Matrix basis = sl.mat;
    report.coalgebra_dim = basis.rref();

    F2Matrix projected(admissible.size());
    for (std::size_t r = 0; r < basis.row_count(); ++r) {
        std::size_t pr = projected.add_row();
        for (std::size_t c = 0; c < admissible.size(); ++c) {
            std::size_t col = word_column(sl.words, admissible[c]);
            if (basis.get(r, col))
                projected.set(pr, c);
        }
    }
    report.projection_rank = projected.rref();
    report.pass = report.coalgebra_dim == report.admissible_count &&
                  report.projection_rank == report.admissible_count;
    return report;
}

CopbwReport weak_copbw_check(const AdmissibleSpec& spec, int n, int degree,
                             const Window& window)
{
    CoalgebraSlices slices(spec, window);
    return weak_copbw_check(slices, spec, n, degree);
}

namespace {

std::vector<IndexPair> s_pairs_in_window(const AdmissibleSpec& spec,
                                         const Window& window)
{
    std::vector<IndexPair> out;
    for (int i = window.index_lo; i <= window.index_hi; ++i) {
        if (!spec.index_in_universe(i))
            continue;
        for (int j = window.index_lo; j <= window.index_hi; ++j) {
            if (!spec.index_in_universe(j))
                continue;
            IndexPair p{i, j};
            if (spec.in_s(p))
                out.push_back(p);
        }
    }
    return out;
}

bool pair_in_j(const IndexPredicate& J, const IndexPair& p)
{
    return J(p.i) && J(p.j);
}

}  // namespace

AdmissibilityCheck check_pullback_admissible(const AdmissibleSpec& spec,
                                             const IndexPredicate& J,
                                             const Window& window)
{
    for (const auto& s : s_pairs_in_window(spec, window)) {
        if (!pair_in_j(J, s))
            continue;
        for (const auto& t : spec.row_support(s)) {
            if (spec.coeff(s, t) && !pair_in_j(J, t))
                return {false, std::make_pair(s, t)};
        }
    }
    return {};
}

AdmissibilityCheck check_pushforward_admissible(const AdmissibleSpec& spec,
                                                const IndexPredicate& J,
                                                const Window& window)
{
    if (spec.col_support) {
        // column-driven scan: the exact mirror of the pullback scan, so
        // that a strictly self-dual spec gives matching witnesses
        for (int l = window.index_lo; l <= window.index_hi; ++l) {
            if (!spec.index_in_universe(l))
                continue;
            for (int m = window.index_lo; m <= window.index_hi; ++m) {
                if (!spec.index_in_universe(m))
                    continue;
                IndexPair t{l, m};
                if (spec.in_s(t) || !pair_in_j(J, t))
                    continue;
                for (const auto& s : spec.col_support(t)) {
                    if (spec.coeff(s, t) && !pair_in_j(J, s))
                        return {false, std::make_pair(s, t)};
                }
            }
        }
        return {};
    }
    for (const auto& s : s_pairs_in_window(spec, window)) {
        if (pair_in_j(J, s))
            continue;
        for (const auto& t : spec.row_support(s)) {
            if (spec.coeff(s, t) && pair_in_j(J, t))
                return {false, std::make_pair(s, t)};
        }
    }
    return {};
}

ReciprocityReport reciprocity_check(const AdmissibleSpec& spec,
                                    const IndexPredicate& J,
                                    const Window& window)
{
    if (!spec.sigma || !spec.sigma_inv)
        throw NoSigma("reciprocity_check: spec carries no sigma");
    IndexPredicate sigma_j = [J, sigma_inv = spec.sigma_inv](int x) {
        return J(sigma_inv(x));
    };
    // scan the pushforward side over the sigma image of the window, so
    // that witnesses correspond pair for pair under the duality
    Window image{spec.sigma(window.index_lo), spec.sigma(window.index_lo)};
    for (int x = window.index_lo; x <= window.index_hi; ++x) {
        int y = spec.sigma(x);
        image.index_lo = std::min(image.index_lo, y);
        image.index_hi = std::max(image.index_hi, y);
    }
    ReciprocityReport report;
    report.pullback = check_pullback_admissible(spec, J, window);
    report.pushforward = check_pushforward_admissible(spec, sigma_j, image);
    report.agree = report.pullback.ok == report.pushforward.ok;
    return report;
}

AdmissibilityCheck check_strict_self_dual(const AdmissibleSpec& spec,
                                          const Window& window)
{
    if (!spec.sigma)
        throw NoSigma("check_strict_self_dual: spec carries no sigma");
    auto s_pairs = s_pairs_in_window(spec, window);

    for (const auto& s : s_pairs) {
        IndexPair image = spec.sigma_pair(s);
        if (spec.in_s(image))
            return {false, std::make_pair(s, image)};
    }

    std::vector<IndexPair> sp_pairs;
    for (int l = window.index_lo; l <= window.index_hi; ++l)
        for (int m = window.index_lo; m <= window.index_hi; ++m) {
            IndexPair p{l, m};
            if (spec.pair_in_universe(p) && !spec.in_s(p))
                sp_pairs.push_back(p);
        }

    for (const auto& s : s_pairs) {
        for (const auto& t : sp_pairs) {
            bool lhs = spec.coeff(s, t);
            bool rhs = spec.coeff(spec.sigma_pair(t), spec.sigma_pair(s));
            if (lhs != rhs)
                return {false, std::make_pair(s, t)};
        }
    }
    return {};
}

F2Matrix perp(const F2Matrix& r)
{
    return nullspace(r);
}

AdmissibleSpec restrict_spec(const AdmissibleSpec& spec,
                             const IndexPredicate& J)
{
    AdmissibleSpec out = spec;
    if (spec.in_universe) {
        out.in_universe = [J, old = spec.in_universe](int x) {
            return old(x) && J(x);
        };
    } else {
        out.in_universe = J;
    }
    out.coeff = [J, coeff = spec.coeff](const IndexPair& s,
                                        const IndexPair& t) {
        if (!(J(s.i) && J(s.j) && J(t.i) && J(t.j)))
            return false;
        return coeff(s, t);
    };
    out.row_support = [J, rs = spec.row_support](const IndexPair& s) {
        std::vector<IndexPair> filtered;
        for (const auto& t : rs(s))
            if (J(t.i) && J(t.j))
                filtered.push_back(t);
        return filtered;
    };
    if (spec.col_support) {
        out.col_support = [J, cs = spec.col_support](const IndexPair& t) {
            std::vector<IndexPair> filtered;
            for (const auto& s : cs(t))
                if (J(s.i) && J(s.j))
                    filtered.push_back(s);
            return filtered;
        };
    }
    return out;
}

SurjectivityReport surjectivity_check(const AdmissibleSpec& spec,
                                      const IndexPredicate& J, int n,
                                      int degree, const Window& window)
{
    auto pullback = check_pullback_admissible(spec, J, window);
    if (!pullback.ok)
        throw PreconditionFailed(
            "surjectivity_check: pullback is not admissible for J");

    AdmissibleSpec restricted = restrict_spec(spec, J);

    SurjectivityReport report;
    report.ambient = weak_copbw_check(spec, n, degree, window);
    report.restricted = weak_copbw_check(restricted, n, degree, window);
    if (!report.ambient.pass || !report.restricted.pass)
        throw PreconditionFailed(
            "surjectivity_check: weak coPBW fails on a side");

    auto ambient_words = enumerate_admissible_words(spec, n, degree, window);
    for (const auto& w : ambient_words) {
        bool in_j = true;
        for (int a : w)
            if (!J(a))
                in_j = false;
        if (in_j)
            ++report.ambient_j_count;
    }
    report.restricted_count =
        enumerate_admissible_words(restricted, n, degree, window).size();
    report.pass = report.ambient_j_count == report.restricted_count;
    return report;
}

}  // namespace quadf2
