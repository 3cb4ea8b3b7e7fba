#ifndef QUADF2_ADDITIVE_HPP
#define QUADF2_ADDITIVE_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "quadf2/gf2.hpp"

namespace quadf2::bialg {

struct BadSplit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadIndex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal (cohomological) degree of the slot generator alpha_i.
inline int alpha_degree(int i) { return (1 << i) - 1; }

/// Variable id of alpha_i in elements of B+_n handled by this module.
inline int alpha_var(int i) { return i; }

// Default variable-id bases for the two tensor factors of a diagonal.
inline constexpr int kFirstFactorBase = 100;
inline constexpr int kSecondFactorBase = 200;
// Q-coordinate variable-id bases (Q_{p,t} of the two factors).
inline constexpr int kFirstFactorQBase = 300;
inline constexpr int kSecondFactorQBase = 400;

/// The i-th tensor copy of the degree-one generator of B+_1 gets variable
/// id u_ids[i-1]; distinct factors use disjoint ids.
struct TensorAlgebraCtx {
    std::vector<int> u_ids;

    int factors() const { return static_cast<int>(u_ids.size()); }
    int u(int factor) const { return u_ids.at(factor - 1); }

    /// u_t = t for t = 1..n.
    static TensorAlgebraCtx standard(int n);
};

/// Additive polynomial sum c_i x^(2^i), c_0 = 1, stored as coefficient
/// slots 0..height.
struct AdditivePoly {
    std::vector<PolyF2> coeffs;

    int height() const { return static_cast<int>(coeffs.size()) - 1; }

    /// x + v_1 x^2 + ... + v_h x^(2^h) with v_i = variable(var_base + i).
    static AdditivePoly generic(int height, int var_base);
    static AdditivePoly generic(int height,
                                const std::vector<int>& var_ids);
    static AdditivePoly identity() { return generic(0, 0); }
};

/// Coefficients of outer o inner: slot k = sum over i+j=k of
/// outer[i] * inner[j]^(2^i), exact through slot `truncation`.
AdditivePoly compose_additive(const AdditivePoly& outer,
                              const AdditivePoly& inner, int truncation);

/// Images of alpha_1..alpha_n under the diagonal B+_n -> B+_p (x) B+_q,
/// as polynomials in the factor generators: the first factor's alpha_k is
/// variable(first_base + k), the second factor's is variable(second_base
/// + k).  Throws BadSplit if p + q != n or a part is negative.
std::vector<PolyF2> diagonal(int n, int p, int q,
                             int first_base = kFirstFactorBase,
                             int second_base = kSecondFactorBase);

/// Images alpha'_1..alpha'_n of the generators under the iterated diagonal
/// into (B+_1)^(x n) = F2[u_1..u_n].
std::vector<PolyF2> iterated_diagonal_images(int n,
                                             const TensorAlgebraCtx& ctx);

/// delta_a: iterated coproduct followed by the augmentation of the a-th
/// factor.  `element` is a polynomial in alpha_var(1..n); the result lives
/// in F2[u_1..u_n] with u_a absent.
PolyF2 partial_counit(int n, int a, const PolyF2& element);

/// Degree-d slice (as a row space over the degree-d monomials of
/// F2[u_1..u_num_vars]) of the subalgebra generated by the given
/// homogeneous generators of positive degree.
F2Matrix subalgebra_degree_slice(
    const std::vector<std::pair<PolyF2, int>>& generators, int num_vars,
    int degree);

/// Number of monomials of B+_n in internal degree d (exponent tuples with
/// sum e_i * (2^i - 1) = d).
long long bplus_dimension(int n, int degree);

struct QuadraticityRecord {
    int degree = 0;
    std::size_t dim_left = 0;          // B+_{n-1} (x) B+_1
    std::size_t dim_right = 0;         // B+_1 (x) B+_{n-1}
    std::size_t dim_intersection = 0;
    std::size_t dim_bn = 0;            // image of B+_n
    bool contains_bn = false;
    bool equal = false;
};

/// Per internal degree d <= max_internal_degree, compares the intersection
/// of the two edge subalgebras of F2[u_1..u_n] with the image of B+_n.
std::vector<QuadraticityRecord> quadraticity_check(int n,
                                                   int max_internal_degree);

/// Images of Q_{n,0}..Q_{n,n-1} under the diagonal for the split (p, q),
/// as Laurent polynomials in the Q-generators of the factors
/// (variable ids kFirstFactorQBase + t and kSecondFactorQBase + t).
std::vector<PolyF2> q_coordinate_coproduct(int n, int p, int q);

/// theta_n: xi_i -> alpha_i for i <= n, the whole monomial to 0 if any
/// factor has i > n.  The monomial is given as index -> exponent.
PolyF2 theta(int n, const std::map<int, int>& xi_monomial);

/// Coproduct of xi_1..xi_n computed by composing two generic additive
/// power series truncated at slot n; first-factor xi_i is
/// variable(kFirstFactorBase + i), second-factor variable(kSecondFactorBase
/// + i).
std::vector<PolyF2> milnor_coproduct(int n);

}  // namespace quadf2::bialg

#endif
