#ifndef QUADF2_SINGER_HPP
#define QUADF2_SINGER_HPP

#include <stdexcept>
#include <vector>

#include "quadf2/gf2.hpp"
#include "quadf2/quadratic.hpp"

namespace quadf2::singer {

// Variable ids used by this module.
inline constexpr int kAlpha1 = 1;  // deg 1
inline constexpr int kAlpha2 = 2;  // deg 3
inline constexpr int kVarX = 1;    // deg 1 (image ring F2[x^{+-1}, y^{+-1}])
inline constexpr int kVarY = 2;    // deg 1

struct NegativeExcess : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadMembership : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool in_s(const IndexPair& p) { return p.i >= 2 * p.j; }

/// The shift (i, j) -> (i + 2, j + 1); preserves S and S' membership.
inline IndexPair shift(const IndexPair& p) { return {p.i + 2, p.j + 1}; }

/// Homogeneous polynomial of internal degree e in alpha_1, alpha_2, defined
/// by h_0 = 1, h_{e+1} = alpha_1 h_e + alpha_2 h_{e-2} (h_k = 0 for k < 0).
struct HPolynomial {
    int excess = 0;
    PolyF2 body;
};

HPolynomial h_polynomial(int excess);

/// Image of alpha_2^j h_{(e,0)} in F2[x^{+-1}, y^{+-1}] under
/// alpha_1 -> x + y, alpha_2 -> x^2 y, for (i, j) in S with e = i - 2j.
/// Exactly one monomial x^a y^b has (a, b) in S, namely x^i y^j.
PolyF2 h_image(int i, int j);

/// Coefficient function: binom(m-j-1, m+j-l-1) mod 2 on equal-degree pairs
/// ((i,j), (l,m)) of S x S', zero otherwise.
int f_gamma(const IndexPair& s, const IndexPair& t);

/// All (l, m) with m in [ceil((i+1)/2), i-j], l = i+j-m; outside this range
/// the binomial's arguments force f to vanish.
std::vector<IndexPair> f_row_support(const IndexPair& s);

/// Column support of f at (l, m) in S': the (i, j) in S with
/// j in [l-m+1, m-1], i = l+m-j.
std::vector<IndexPair> f_col_support(const IndexPair& t);

/// The full Singer spec <Z; S, f> with sigma(n) = 1 - n.
AdmissibleSpec gamma_spec();

/// The spec of B+ : the pullback of gamma_spec() along N < Z.
AdmissibleSpec gamma_plus_spec();

struct CrossValidateReport {
    std::size_t rows_checked = 0;
    // (s, t) pairs where the h-image coefficient disagrees with f_gamma
    std::vector<std::pair<IndexPair, IndexPair>> mismatches;
    bool pass() const { return mismatches.empty(); }
};

/// Independent oracle for the closed-form f: expands h_image(i, j) for every
/// (i, j) in S with excess <= max_excess and |j| <= max_abs_j, and compares
/// its S'-coefficients with f_gamma on the row support (and 0 elsewhere).
CrossValidateReport f_cross_validate(int max_excess, int max_abs_j);

}  // namespace quadf2::singer

#endif
