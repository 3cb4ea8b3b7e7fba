#ifndef QUADF2_STEENROD_HPP
#define QUADF2_STEENROD_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadf2/quadratic.hpp"

namespace quadf2::steenrod {

// y_{a_1} ... y_{a_k}, stored as the index sequence
using QMonomial = std::vector<int>;

inline bool pair_admissible(int a, int b) { return a >= 2 * b; }
bool is_admissible(const QMonomial& m);
long long internal_degree(const QMonomial& m);

struct StepLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnboundedWithoutWindow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NegativeIndex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// F2 linear combination of monomials; the set is kept sorted by length,
/// then lexicographically, so equality and printing are deterministic.
class QElement {
public:
    QElement() = default;
    explicit QElement(QMonomial m) { toggle(std::move(m)); }

    static QElement zero() { return {}; }
    static QElement one() { return QElement(QMonomial{}); }

    bool is_zero() const { return monomials_.empty(); }
    const std::vector<QMonomial>& monomials() const { return monomials_; }

    /// Adds the monomial mod 2 (removes it if already present).
    void toggle(QMonomial m);
    QElement& operator+=(const QElement& rhs);
    friend QElement operator+(QElement lhs, const QElement& rhs)
    {
        lhs += rhs;
        return lhs;
    }

    bool operator==(const QElement&) const = default;

    std::string str() const;

private:
    std::vector<QMonomial> monomials_;  // canonical order
};

/// Rewrites y_u y_v: identity when u >= 2v, otherwise the sum of
/// y_{u+v-m} y_m over m in [u-v+1, floor(u/2)] with binom(v-m-1, v+m-u-1)
/// odd.  Every output pair is admissible with left index > u.
QElement adem_expand(int u, int v);

enum class Strategy { leftmost, rightmost };

inline constexpr std::size_t kDefaultStepLimit = 100000;

struct NormalizeStats {
    std::size_t steps = 0;
};

/// Admissible normal form, replacing one inadmissible adjacent pair per
/// step (position picked by `strategy`) until none remains.
QElement normalize(const QMonomial& m, Strategy strategy = Strategy::leftmost,
                   std::size_t step_limit = kDefaultStepLimit,
                   NormalizeStats* stats = nullptr);
QElement normalize(const QElement& e, Strategy strategy = Strategy::leftmost,
                   std::size_t step_limit = kDefaultStepLimit,
                   NormalizeStats* stats = nullptr);

/// Concatenates all monomial pairs and normalizes.
QElement multiply(const QElement& a, const QElement& b,
                  Strategy strategy = Strategy::leftmost,
                  std::size_t step_limit = kDefaultStepLimit);

/// Number of admissible sequences of length k with index sum d.  With
/// `nonneg` all indices are >= 0; otherwise a finite index window is
/// required (throws UnboundedWithoutWindow when absent).
long long admissible_basis_count(int k, int d, bool nonneg,
                                 const std::optional<Window>& window = {});

/// Quotient normal form: normalize in the full algebra, then drop
/// admissible monomials containing a negative index.
QElement atilde_normalize_via_quotient(const QMonomial& m,
                                       Strategy strategy = Strategy::leftmost,
                                       std::size_t step_limit =
                                           kDefaultStepLimit);

/// Same normal form by an independent route: the expansion sum is clipped
/// to m >= 0 from the start, so negative indices never appear.
QElement atilde_normalize_clipped(const QMonomial& m,
                                  Strategy strategy = Strategy::leftmost,
                                  std::size_t step_limit = kDefaultStepLimit);

/// Runs both routes and returns the common answer; throws std::logic_error
/// if they ever disagree.  Input indices must be nonnegative.
QElement atilde_normalize(const QMonomial& m,
                          Strategy strategy = Strategy::leftmost,
                          std::size_t step_limit = kDefaultStepLimit);

struct RelationsReport {
    std::size_t pairs_checked = 0;
    std::vector<IndexPair> mismatches;
    bool pass() const { return mismatches.empty(); }
};

/// For every inadmissible (u, v) in the window, compares adem_expand(u, v)
/// against the column of the degree-2 coefficient function at (u, v).
RelationsReport relations_match_f(const Window& window);

}  // namespace quadf2::steenrod

#endif
