#include "quadf2/gf2.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace quadf2 {

Monomial mul_monomials(const Monomial& a, const Monomial& b)
{
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            out.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e != 0)
                out.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    while (i < a.size())
        out.push_back(a[i++]);
    while (j < b.size())
        out.push_back(b[j++]);
    return out;
}

PolyF2 PolyF2::one()
{
    PolyF2 p;
    p.terms_.push_back(Monomial{});
    return p;
}

PolyF2 PolyF2::variable(int id, int exponent)
{
    if (exponent == 0)
        return one();
    PolyF2 p;
    p.terms_.push_back(Monomial{{id, exponent}});
    return p;
}

PolyF2 PolyF2::from_terms(std::vector<Monomial> terms)
{
    std::sort(terms.begin(), terms.end());
    // duplicates cancel in pairs
    PolyF2 p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back() == t)
            p.terms_.pop_back();
        else
            p.terms_.push_back(std::move(t));
    }
    return p;
}

PolyF2& PolyF2::operator+=(const PolyF2& rhs)
{
    std::vector<Monomial> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        if (terms_[i] < rhs.terms_[j])
            out.push_back(terms_[i++]);
        else if (rhs.terms_[j] < terms_[i])
            out.push_back(rhs.terms_[j++]);
        else {
            ++i;
            ++j;
        }
    }
    while (i < terms_.size())
        out.push_back(terms_[i++]);
    while (j < rhs.terms_.size())
        out.push_back(rhs.terms_[j++]);
    terms_ = std::move(out);
    return *this;
}

PolyF2 operator*(const PolyF2& lhs, const PolyF2& rhs)
{
    std::vector<Monomial> out;
    out.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& a : lhs.terms_)
        for (const auto& b : rhs.terms_)
            out.push_back(mul_monomials(a, b));
    return PolyF2::from_terms(std::move(out));
}

PolyF2 PolyF2::frobenius(int k) const
{
    PolyF2 out;
    out.terms_ = terms_;
    for (auto& t : out.terms_)
        for (auto& ve : t)
            ve.second <<= k;
    // exponent scaling preserves the sorted order
    return out;
}

PolyF2 PolyF2::pow(long long e) const
{
    if (e < 0) {
        return inverse_monomial().pow(-e);
    }
    PolyF2 result = one();
    PolyF2 base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        base = base.frobenius(1);
        e >>= 1;
    }
    return result;
}

PolyF2 PolyF2::substitute(const std::map<int, PolyF2>& assignment) const
{
    PolyF2 result;
    for (const auto& term : terms_) {
        PolyF2 acc = one();
        for (const auto& [var, exp] : term) {
            auto it = assignment.find(var);
            if (it == assignment.end()) {
                acc *= variable(var, exp);
                continue;
            }
            const PolyF2& image = it->second;
            if (exp < 0 && !image.is_monomial())
                throw NonInvertibleImage(
                    "negative exponent requires a monomial image");
            acc *= image.pow(exp);
        }
        result += acc;
    }
    return result;
}

PolyF2 PolyF2::inverse_monomial() const
{
    if (!is_monomial())
        throw NonInvertibleImage("not a monomial");
    PolyF2 out;
    Monomial m = terms_[0];
    for (auto& ve : m)
        ve.second = -ve.second;
    out.terms_.push_back(std::move(m));
    return out;
}

namespace {
int monomial_weight(const Monomial& m, const std::function<int(int)>& weight)
{
    int d = 0;
    for (const auto& [var, exp] : m)
        d += weight(var) * exp;
    return d;
}
}  // namespace

int PolyF2::homogeneous_degree(const std::function<int(int)>& weight) const
{
    if (terms_.empty())
        throw std::logic_error("degree of zero polynomial");
    int d = monomial_weight(terms_[0], weight);
    for (const auto& t : terms_)
        if (monomial_weight(t, weight) != d)
            throw std::logic_error("polynomial is not homogeneous");
    return d;
}

bool PolyF2::is_homogeneous(const std::function<int(int)>& weight) const
{
    if (terms_.empty())
        return true;
    int d = monomial_weight(terms_[0], weight);
    for (const auto& t : terms_)
        if (monomial_weight(t, weight) != d)
            return false;
    return true;
}

std::string PolyF2::str(const std::function<std::string(int)>& var_name) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& t : terms_) {
        if (!first_term)
            os << " + ";
        first_term = false;
        if (t.empty()) {
            os << "1";
            continue;
        }
        bool first_var = true;
        for (const auto& [var, exp] : t) {
            if (!first_var)
                os << " ";
            first_var = false;
            if (var_name)
                os << var_name(var);
            else
                os << "v" << var;
            if (exp != 1)
                os << "^" << exp;
        }
    }
    return os.str();
}

std::size_t F2Matrix::add_row()
{
    rows_.emplace_back(words_for(width_), 0);
    return rows_.size() - 1;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value)
{
    assert(r < rows_.size() && c < width_);
    if (value)
        rows_[r][c >> 6] |= (std::uint64_t{1} << (c & 63));
    else
        rows_[r][c >> 6] &= ~(std::uint64_t{1} << (c & 63));
}

bool F2Matrix::get(std::size_t r, std::size_t c) const
{
    assert(r < rows_.size() && c < width_);
    return (rows_[r][c >> 6] >> (c & 63)) & 1;
}

void F2Matrix::xor_row_into(std::size_t src, std::size_t dst)
{
    auto& d = rows_[dst];
    const auto& s = rows_[src];
    for (std::size_t w = 0; w < s.size(); ++w)
        d[w] ^= s[w];
}

void F2Matrix::append_packed_row(std::vector<std::uint64_t> row)
{
    assert(row.size() == words_for(width_));
    rows_.push_back(std::move(row));
}

std::size_t F2Matrix::rref()
{
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < width_ && pivot_row < rows_.size();
         ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows_.size() && !get(sel, col))
            ++sel;
        if (sel == rows_.size())
            continue;
        std::swap(rows_[sel], rows_[pivot_row]);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r != pivot_row && get(r, col))
                xor_row_into(pivot_row, r);
        }
        ++pivot_row;
    }
    rows_.resize(pivot_row);
    return pivot_row;
}

bool F2Matrix::reduced_contains(std::vector<std::uint64_t> v) const
{
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        // leading column of row r
        std::size_t lead = width_;
        for (std::size_t c = 0; c < width_; ++c) {
            if (get(r, c)) {
                lead = c;
                break;
            }
        }
        if (lead == width_)
            continue;
        if ((v[lead >> 6] >> (lead & 63)) & 1)
            for (std::size_t w = 0; w < v.size(); ++w)
                v[w] ^= rows_[r][w];
    }
    for (auto w : v)
        if (w != 0)
            return false;
    return true;
}

std::pair<std::size_t, F2Matrix> rank_and_reduce(F2Matrix m)
{
    std::size_t rank = m.rref();
    return {rank, std::move(m)};
}

F2Matrix intersect_rowspaces(const F2Matrix& a, const F2Matrix& b)
{
    if (a.width() != b.width())
        throw ColumnMismatch("matrix widths differ");
    if (!a.labels().empty() && !b.labels().empty() &&
        a.labels() != b.labels())
        throw ColumnMismatch("column labels differ");

    const std::size_t w = a.width();
    const std::size_t words = F2Matrix::words_for(w);

    // Zassenhaus: reduce [[A A] [B 0]]; rows with zero left half carry a
    // basis of the intersection in their right half.
    F2Matrix stacked(2 * w);
    for (std::size_t r = 0; r < a.row_count(); ++r) {
        std::size_t nr = stacked.add_row();
        for (std::size_t c = 0; c < w; ++c) {
            if (a.get(r, c)) {
                stacked.set(nr, c);
                stacked.set(nr, w + c);
            }
        }
    }
    for (std::size_t r = 0; r < b.row_count(); ++r) {
        std::size_t nr = stacked.add_row();
        for (std::size_t c = 0; c < w; ++c)
            if (b.get(r, c))
                stacked.set(nr, c);
    }
    stacked.rref();

    F2Matrix result = a.labels().empty() ? F2Matrix(w) : F2Matrix(a.labels());
    for (std::size_t r = 0; r < stacked.row_count(); ++r) {
        bool left_zero = true;
        const auto& packed = stacked.packed_row(r);
        for (std::size_t c = 0; c < w && left_zero; ++c)
            if ((packed[c >> 6] >> (c & 63)) & 1)
                left_zero = false;
        if (!left_zero)
            continue;
        std::vector<std::uint64_t> row(words, 0);
        for (std::size_t c = 0; c < w; ++c)
            if ((packed[(w + c) >> 6] >> ((w + c) & 63)) & 1)
                row[c >> 6] |= (std::uint64_t{1} << (c & 63));
        result.append_packed_row(std::move(row));
    }
    result.rref();
    return result;
}

F2Matrix nullspace(const F2Matrix& m)
{
    auto [rank, red] = rank_and_reduce(m);
    const std::size_t w = m.width();

    std::vector<std::size_t> pivot_col_of_row(rank);
    std::vector<bool> is_pivot(w, false);
    for (std::size_t r = 0; r < rank; ++r) {
        for (std::size_t c = 0; c < w; ++c) {
            if (red.get(r, c)) {
                pivot_col_of_row[r] = c;
                is_pivot[c] = true;
                break;
            }
        }
    }

    F2Matrix result =
        m.labels().empty() ? F2Matrix(w) : F2Matrix(m.labels());
    for (std::size_t f = 0; f < w; ++f) {
        if (is_pivot[f])
            continue;
        std::size_t nr = result.add_row();
        result.set(nr, f);
        for (std::size_t r = 0; r < rank; ++r)
            if (red.get(r, f))
                result.set(nr, pivot_col_of_row[r]);
    }
    return result;
}

}  // namespace quadf2
