#ifndef QUADF2_GF2_HPP
#define QUADF2_GF2_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadf2 {

/// binom(a, b) mod 2 by the Lucas criterion: 1 iff 0 <= b <= a and the
/// binary digits of b are dominated by those of a.  Out-of-range inputs
/// (a < 0, b < 0 or b > a) give 0.
inline int binom_mod2(long long a, long long b) noexcept
{
    if (b < 0 || a < 0 || b > a)
        return 0;
    return ((b & (a - b)) == 0) ? 1 : 0;
}

struct NonInvertibleImage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A monomial is a sorted sparse exponent vector: (variable id, exponent),
// exponent != 0.  Negative exponents are permitted (Laurent monomials).
using Monomial = std::vector<std::pair<int, int>>;

Monomial mul_monomials(const Monomial& a, const Monomial& b);

/// Sparse multivariate (Laurent) polynomial over F2.  Terms form a set of
/// monomials in canonical sorted order; addition is symmetric difference.
class PolyF2 {
public:
    PolyF2() = default;

    static PolyF2 zero() { return PolyF2{}; }
    static PolyF2 one();
    static PolyF2 variable(int id, int exponent = 1);
    static PolyF2 from_terms(std::vector<Monomial> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    const std::vector<Monomial>& terms() const { return terms_; }

    PolyF2& operator+=(const PolyF2& rhs);
    friend PolyF2 operator+(PolyF2 lhs, const PolyF2& rhs)
    {
        lhs += rhs;
        return lhs;
    }
    friend PolyF2 operator*(const PolyF2& lhs, const PolyF2& rhs);
    PolyF2& operator*=(const PolyF2& rhs)
    {
        *this = *this * rhs;
        return *this;
    }

    /// Frobenius power p^(2^k): exponents scale, no cross terms in char 2.
    PolyF2 frobenius(int k) const;

    /// p^e for e >= 0; negative e only for a single (invertible) monomial.
    PolyF2 pow(long long e) const;

    /// Simultaneous substitution.  Variables absent from the assignment map
    /// to themselves.  A variable occurring with a negative exponent must
    /// map to a single monomial, otherwise NonInvertibleImage is thrown.
    PolyF2 substitute(const std::map<int, PolyF2>& assignment) const;

    /// Reciprocal of a single-monomial polynomial.
    PolyF2 inverse_monomial() const;

    /// Total degree weighted by `weight` per variable; requires the
    /// polynomial to be homogeneous (checked) and nonzero.
    int homogeneous_degree(const std::function<int(int)>& weight) const;
    bool is_homogeneous(const std::function<int(int)>& weight) const;

    bool operator==(const PolyF2&) const = default;

    std::string str(const std::function<std::string(int)>& var_name = {}) const;

private:
    std::vector<Monomial> terms_;  // sorted, no duplicates
};

struct ColumnMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense bit matrix over F2 with machine-word-packed rows.  Column labels,
/// when present, identify which abstract basis element each column
/// represents; operations combining two matrices require equal labels.
class F2Matrix {
public:
    F2Matrix() = default;
    explicit F2Matrix(std::size_t width) : width_(width) {}
    explicit F2Matrix(std::vector<std::string> labels)
        : width_(labels.size()), labels_(std::move(labels))
    {
    }

    std::size_t width() const { return width_; }
    std::size_t row_count() const { return rows_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::size_t add_row();  // appends a zero row, returns its index
    void set(std::size_t r, std::size_t c, bool value = true);
    bool get(std::size_t r, std::size_t c) const;

    void xor_row_into(std::size_t src, std::size_t dst);

    /// In-place reduction to reduced row-echelon form; zero rows are
    /// dropped.  Returns the rank.
    std::size_t rref();

    /// True if v (a packed row of matching width) lies in the row space.
    /// Requires *this to be in reduced form.
    bool reduced_contains(std::vector<std::uint64_t> v) const;

    const std::vector<std::uint64_t>& packed_row(std::size_t r) const
    {
        return rows_[r];
    }
    void append_packed_row(std::vector<std::uint64_t> row);
    static std::size_t words_for(std::size_t width)
    {
        return (width + 63) / 64;
    }

private:
    std::size_t width_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

/// Row rank and reduced row-echelon form; the row space is preserved.
std::pair<std::size_t, F2Matrix> rank_and_reduce(F2Matrix m);

/// Basis of the intersection of the two row spaces (Zassenhaus block
/// reduction).  Widths and column labels must agree.
F2Matrix intersect_rowspaces(const F2Matrix& a, const F2Matrix& b);

/// Basis of the right kernel {v : M v^T = 0}, as rows.
F2Matrix nullspace(const F2Matrix& m);

}  // namespace quadf2

#endif
