#ifndef QUADF2_QUADRATIC_HPP
#define QUADF2_QUADRATIC_HPP

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadf2/gf2.hpp"

namespace quadf2 {

/// An element (i, j) of I x I.
struct IndexPair {
    int i = 0;
    int j = 0;

    int excess() const { return i - 2 * j; }
    int degree() const { return i + j; }

    auto operator<=>(const IndexPair&) const = default;
};

std::string to_string(const IndexPair& p);

/// Finite truncation of an infinite index universe: bounds on raw index
/// components and (optionally) on internal degree.
struct Window {
    int index_lo = 0;
    int index_hi = 0;

    bool contains(int index) const
    {
        return index_lo <= index && index <= index_hi;
    }
    bool contains(const IndexPair& p) const
    {
        return contains(p.i) && contains(p.j);
    }
};

struct NotInS : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotDualizable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoSigma : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WindowTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full description of an (I, S)-admissible quadratic coalgebra <I; S, f>
/// with index universe Z (restricted by `in_universe` when set).  The
/// coefficient function is zero outside S x S'; row supports are finite
/// and must contain every s' with f(s, s') = 1.
struct AdmissibleSpec {
    std::function<int(int)> index_degree;
    std::function<bool(int)> in_universe;  // null = all of Z
    std::function<bool(const IndexPair&)> in_s;
    std::function<bool(const IndexPair&, const IndexPair&)> coeff;
    std::function<std::vector<IndexPair>(const IndexPair&)> row_support;
    // column support: finite only for dualizable specs; null when unknown
    std::function<std::vector<IndexPair>(const IndexPair&)> col_support;
    std::function<int(int)> sigma;      // null when no duality bijection
    std::function<int(int)> sigma_inv;  // inverse of sigma

    bool index_in_universe(int index) const
    {
        return !in_universe || in_universe(index);
    }
    bool pair_in_universe(const IndexPair& p) const
    {
        return index_in_universe(p.i) && index_in_universe(p.j);
    }
    int pair_degree(const IndexPair& p) const
    {
        return index_degree(p.i) + index_degree(p.j);
    }
    IndexPair sigma_pair(const IndexPair& p) const
    {
        return IndexPair{sigma(p.i), sigma(p.j)};
    }
};

/// [s] + sum f(s, s') [s'] of the relation basis; over F2 all coefficients
/// are 1 and the support lists exactly the s' with f(s, s') = 1.
struct RelationVector {
    IndexPair s;
    std::vector<IndexPair> support;
};

RelationVector relation_vector(const AdmissibleSpec& spec, const IndexPair& s);

/// <I; S', f^!>: swap S with its complement and transpose f.  Requires a
/// column-support enumerator (dualizability); throws NotDualizable
/// otherwise.
AdmissibleSpec transpose_dual(const AdmissibleSpec& spec);

/// Audits the row/column support enumerators against a brute-force scan of
/// f over the window; throws std::logic_error on any mismatch.
void audit_supports(const AdmissibleSpec& spec, const Window& window);

/// Graded slice of S^(n): all tuples within the window whose consecutive
/// pairs lie in S and whose internal degrees sum to `degree`.  Sorted
/// lexicographically.
std::vector<std::vector<int>> enumerate_admissible_words(
    const AdmissibleSpec& spec, int n, int degree, const Window& window);

/// Degree-d basis of the full word space I^n within the window (no
/// S-condition), together with a bit matrix over those columns.
struct WordSlice {
    std::vector<std::vector<int>> words;  // column order, lex sorted
    F2Matrix mat;                         // rows span the subspace
};

/// Computes the graded pieces of <K[I]; R>_n inside K[I^n] using
/// C_n = (C_{n-1} (x) V) cap (V (x) C_{n-1}), with C_2 spanned by the
/// relation vectors.  Slices are memoized per (n, degree).
class CoalgebraSlices {
public:
    CoalgebraSlices(const AdmissibleSpec& spec, const Window& window)
        : spec_(spec), window_(window)
    {
    }

    const WordSlice& slice(int n, int degree);

    const Window& window() const { return window_; }

private:
    std::vector<std::vector<int>> word_basis(int n, int degree) const;
    std::vector<int> indices_of_degree(int degree) const;

    const AdmissibleSpec& spec_;
    Window window_;
    std::map<std::pair<int, int>, WordSlice> cache_;
};

struct CopbwReport {
    int n = 0;
    int degree = 0;
    std::size_t coalgebra_dim = 0;
    std::size_t admissible_count = 0;
    std::size_t projection_rank = 0;
    bool pass = false;
};

/// Checks the weak coPBW property on the (n, d) slice: the coalgebra piece
/// projects isomorphically onto the span of the admissible words.
CopbwReport weak_copbw_check(const AdmissibleSpec& spec, int n, int degree,
                             const Window& window);
CopbwReport weak_copbw_check(CoalgebraSlices& slices,
                             const AdmissibleSpec& spec, int n, int degree);

using IndexPredicate = std::function<bool(int)>;

struct AdmissibilityCheck {
    bool ok = true;
    std::optional<std::pair<IndexPair, IndexPair>> witness;
};

/// Pullback criterion: f(s_J, s') = 0 for all s_J in S_J and
/// s' in S' \ S'_J, scanned over the window.
AdmissibilityCheck check_pullback_admissible(const AdmissibleSpec& spec,
                                             const IndexPredicate& J,
                                             const Window& window);

/// Pushforward criterion: f(s, s') = 0 for all s in S \ S_J and
/// s' in S'_J, scanned over the window.
AdmissibilityCheck check_pushforward_admissible(const AdmissibleSpec& spec,
                                                const IndexPredicate& J,
                                                const Window& window);

struct ReciprocityReport {
    AdmissibilityCheck pullback;       // for J
    AdmissibilityCheck pushforward;    // for sigma(J)
    bool agree = false;
};

/// Evaluates the pullback check for J and the pushforward check for
/// sigma(J); for a strictly self-dual spec the two must agree.
ReciprocityReport reciprocity_check(const AdmissibleSpec& spec,
                                    const IndexPredicate& J,
                                    const Window& window);

/// Verifies sigma(S cap window) lies in S' and f(s, s') = f(sigma s',
/// sigma s) for all window pairs of equal degree.
AdmissibilityCheck check_strict_self_dual(const AdmissibleSpec& spec,
                                          const Window& window);

/// Annihilator of the row space of r under the dual-basis pairing on the
/// two-fold tensor square (columns labeled by ordered pairs of tags).
F2Matrix perp(const F2Matrix& r);

struct SurjectivityReport {
    CopbwReport ambient;
    CopbwReport restricted;
    std::size_t ambient_j_count = 0;     // |S^(n) cap J^n| at this degree
    std::size_t restricted_count = 0;    // |S_J^(n)| at this degree
    bool pass = false;
};

/// Confirms the projection K[S^(n)] -> K[S_J^(n)] is onto at the slice,
/// after verifying the weak coPBW property on both sides.
SurjectivityReport surjectivity_check(const AdmissibleSpec& spec,
                                      const IndexPredicate& J, int n,
                                      int degree, const Window& window);

/// The pullback spec <J; S_J, f restricted>.
AdmissibleSpec restrict_spec(const AdmissibleSpec& spec,
                             const IndexPredicate& J);

}  // namespace quadf2

#endif
