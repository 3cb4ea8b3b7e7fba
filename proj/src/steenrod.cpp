#include "quadf2/steenrod.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "quadf2/singer.hpp"

namespace quadf2::steenrod {

bool is_admissible(const QMonomial& m)
{
    for (std::size_t t = 0; t + 1 < m.size(); ++t)
        if (!pair_admissible(m[t], m[t + 1]))
            return false;
    return true;
}

long long internal_degree(const QMonomial& m)
{
    return std::accumulate(m.begin(), m.end(), 0LL);
}

namespace {

int floor_div2(int a) { return (a >= 0) ? a / 2 : -((-a + 1) / 2); }

bool canonical_less(const QMonomial& a, const QMonomial& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

}  // namespace

void QElement::toggle(QMonomial m)
{
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m,
                               canonical_less);
    if (it != monomials_.end() && *it == m)
        monomials_.erase(it);
    else
        monomials_.insert(it, std::move(m));
}

QElement& QElement::operator+=(const QElement& rhs)
{
    for (const auto& m : rhs.monomials_)
        toggle(m);
    return *this;
}

std::string QElement::str() const
{
    if (monomials_.empty())
        return "0";
    std::ostringstream out;
    bool first_mono = true;
    for (const auto& m : monomials_) {
        if (!first_mono)
            out << " + ";
        first_mono = false;
        if (m.empty()) {
            out << "1";
            continue;
        }
        bool first_idx = true;
        for (int a : m) {
            if (!first_idx)
                out << " ";
            first_idx = false;
            out << "y" << a;
        }
    }
    return out.str();
}

QElement adem_expand(int u, int v)
{
    if (pair_admissible(u, v))
        return QElement(QMonomial{u, v});
    QElement out;
    for (int m = u - v + 1; m <= floor_div2(u); ++m) {
        if (binom_mod2(v - m - 1, v + m - u - 1)) {
            assert(pair_admissible(u + v - m, m) && u + v - m > u);
            out.toggle(QMonomial{u + v - m, m});
        }
    }
    return out;
}

namespace {

// position of the pair to rewrite, or npos when admissible
std::size_t pick_pair(const QMonomial& m, Strategy strategy)
{
    if (strategy == Strategy::leftmost) {
        for (std::size_t t = 0; t + 1 < m.size(); ++t)
            if (!pair_admissible(m[t], m[t + 1]))
                return t;
    } else {
        for (std::size_t t = m.size() - 1; t-- > 0;)
            if (!pair_admissible(m[t], m[t + 1]))
                return t;
    }
    return static_cast<std::size_t>(-1);
}

template <typename Expand>
QElement rewrite(const QMonomial& start, Strategy strategy,
                 std::size_t step_limit, NormalizeStats* stats,
                 const Expand& expand)
{
    QElement result;
    std::vector<QMonomial> pending{start};
    std::size_t steps = 0;
    while (!pending.empty()) {
        QMonomial m = std::move(pending.back());
        pending.pop_back();
        std::size_t t = pick_pair(m, strategy);
        if (t == static_cast<std::size_t>(-1)) {
            result.toggle(std::move(m));
            continue;
        }
        if (++steps > step_limit)
            throw StepLimitExceeded("rewrite step limit exceeded");
        QElement expanded = expand(m[t], m[t + 1]);
        for (const auto& replacement : expanded.monomials()) {
            QMonomial next;
            next.reserve(m.size());
            next.insert(next.end(), m.begin(), m.begin() + t);
            next.insert(next.end(), replacement.begin(), replacement.end());
            next.insert(next.end(), m.begin() + t + 2, m.end());
            pending.push_back(std::move(next));
        }
    }
    if (stats)
        stats->steps = steps;
    return result;
}

}  // namespace

QElement normalize(const QMonomial& m, Strategy strategy,
                   std::size_t step_limit, NormalizeStats* stats)
{
    return rewrite(m, strategy, step_limit, stats,
                   [](int u, int v) { return adem_expand(u, v); });
}

QElement normalize(const QElement& e, Strategy strategy,
                   std::size_t step_limit, NormalizeStats* stats)
{
    QElement out;
    std::size_t total = 0;
    for (const auto& m : e.monomials()) {
        NormalizeStats s;
        out += normalize(m, strategy, step_limit, &s);
        total += s.steps;
    }
    if (stats)
        stats->steps = total;
    return out;
}

QElement multiply(const QElement& a, const QElement& b, Strategy strategy,
                  std::size_t step_limit)
{
    QElement out;
    for (const auto& ma : a.monomials()) {
        for (const auto& mb : b.monomials()) {
            QMonomial cat = ma;
            cat.insert(cat.end(), mb.begin(), mb.end());
            out += normalize(cat, strategy, step_limit);
        }
    }
    return out;
}

long long admissible_basis_count(int k, int d, bool nonneg,
                                 const std::optional<Window>& window)
{
    if (k < 0)
        throw std::invalid_argument("admissible_basis_count: k must be >= 0");
    if (!nonneg && !window)
        throw UnboundedWithoutWindow(
            "admissible_basis_count: need nonneg or an index window");

    // fill positions right to left; each next value is >= twice the last
    std::function<long long(int, long long, long long)> rec =
        [&](int remaining_slots, long long min_val, long long remaining_sum)
        -> long long {
        if (remaining_slots == 0)
            return remaining_sum == 0 ? 1 : 0;
        long long lo = min_val;
        long long hi;
        if (window) {
            lo = std::max(lo, static_cast<long long>(window->index_lo));
            hi = window->index_hi;
        } else {
            lo = std::max(lo, 0LL);
            hi = remaining_sum;  // the other slots are >= 0
        }
        long long total = 0;
        for (long long a = lo; a <= hi; ++a) {
            long long rest = remaining_sum - a;
            if (a > 0) {
                // slots to the left are >= 2a, 4a, ...
                long long min_rest =
                    a * ((1LL << remaining_slots) - 2);
                if (rest < min_rest)
                    break;
            }
            if (window &&
                rest > static_cast<long long>(remaining_slots - 1) *
                           window->index_hi)
                continue;
            total += rec(remaining_slots - 1, 2 * a, rest);
        }
        return total;
    };
    long long floor_min = window ? window->index_lo : 0;
    // seed so the first (rightmost) slot is unconstrained from below
    return rec(k, window ? static_cast<long long>(window->index_lo)
                         : (nonneg ? 0LL : floor_min),
               d);
}

QElement atilde_normalize_via_quotient(const QMonomial& m, Strategy strategy,
                                       std::size_t step_limit)
{
    QElement full = normalize(m, strategy, step_limit);
    QElement out;
    for (const auto& mono : full.monomials()) {
        bool has_negative =
            std::any_of(mono.begin(), mono.end(), [](int a) { return a < 0; });
        if (!has_negative)
            out.toggle(mono);
    }
    return out;
}

QElement atilde_normalize_clipped(const QMonomial& m, Strategy strategy,
                                  std::size_t step_limit)
{
    auto clipped_expand = [](int u, int v) {
        QElement out;
        for (int c = std::max(u - v + 1, 0); c <= u / 2; ++c)
            if (binom_mod2(v - c - 1, v + c - u - 1))
                out.toggle(QMonomial{u + v - c, c});
        return out;
    };
    return rewrite(m, strategy, step_limit, nullptr, clipped_expand);
}

QElement atilde_normalize(const QMonomial& m, Strategy strategy,
                          std::size_t step_limit)
{
    for (int a : m)
        if (a < 0)
            throw NegativeIndex("atilde_normalize: indices must be >= 0");
    QElement via_quotient =
        atilde_normalize_via_quotient(m, strategy, step_limit);
    QElement clipped = atilde_normalize_clipped(m, strategy, step_limit);
    if (!(via_quotient == clipped))
        throw std::logic_error(
            "atilde_normalize: quotient and clipped routes disagree");
    return via_quotient;
}

RelationsReport relations_match_f(const Window& window)
{
    RelationsReport report;
    for (int u = window.index_lo; u <= window.index_hi; ++u) {
        for (int v = window.index_lo; v <= window.index_hi; ++v) {
            ++report.pairs_checked;
            IndexPair t{u, v};
            QElement expected;
            if (singer::in_s(t)) {
                expected.toggle(QMonomial{u, v});
            } else {
                for (const auto& s : singer::f_col_support(t))
                    if (singer::f_gamma(s, t))
                        expected.toggle(QMonomial{s.i, s.j});
            }
            if (!(adem_expand(u, v) == expected))
                report.mismatches.push_back(t);
        }
    }
    return report;
}

}  // namespace quadf2::steenrod
