#pragma once

#include <string>
#include <vector>

#include "alcove/gallery.hpp"
#include "alcove/gt.hpp"

namespace alcove {

/// N_{i,j}(J) for 1 <= i < j <= n, with N_{i,i} := 0.
struct NStats {
    int n = 0;
    std::vector<int> v;  // indexed by iA_index

    int at(int i, int j) const { return i == j ? 0 : v.at(iA_index(n, {i, j})); }
    bool operator==(const NStats&) const = default;
};

/// True iff {beta_j : j in J} = Phi+ and every non-orthogonal pair of chain
/// roots decreases in the i_A order.
bool is_almost_decreasing(const AdmissibleSubset& J);

/// N_{i,j} = #{ k > j_{i,j} : beta_k = eps_i - eps_j } for the unique
/// J-position of each root.  With require_decreasing set, throws
/// std::invalid_argument unless J is almost i_A-decreasing.
NStats n_stats(const AdmissibleSubset& J, bool require_decreasing = true);

/// J(a): for each root (k,l), the unique path index with
/// N(i) = lambda_k - a_{k,l}; inverse of gt_from_admissible on the canonical
/// path.
AdmissibleSubset admissible_from_gt(GammaPtr canonical, const GTPattern& a);

/// i_A-string datum extracted by walking the raising operators.
StringDatum admissible_string_datum(const AdmissibleSubset& J);

/// Closed form d_{a,b} = sum_{m=1}^{b-a}(N_{m,m+n-b+1} - N_{m,m+n-b}).
StringDatum admissible_string_formula(int n, const NStats& N);

/// Transport into the canonical path crystal by string-datum matching.
class StringTransport {
  public:
    explicit StringTransport(int n, const Weight& lambda);

    const GammaPtr& canonical_path() const { return path_; }
    const CrystalGraph& canonical_crystal() const { return graph_; }

    AdmissibleSubset canonicalize(const AdmissibleSubset& J) const;

  private:
    GammaPtr path_;
    CrystalGraph graph_;
};

/// a_{i,j}(J) = lambda_i - N_{i,j}(J); subsets that are not almost
/// i_A-decreasing over their own path are first transported to the canonical
/// one.
GTPattern gt_from_admissible(const AdmissibleSubset& J,
                             const StringTransport& transport);
GTPattern gt_from_admissible(const AdmissibleSubset& J);

struct PropReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Item-by-item check of the structural properties of almost i_A-decreasing
/// subsets: index ordering, folded-root identity, the composition of
/// Itilde(J,p), the folded-level difference formulas, the weight formula,
/// the eps-gap formula, the N-decrement under raising, the eps closed form
/// (where its hypothesis applies), the closed-form string datum, and the
/// interlacing bounds on N.
PropReport verify_decreasing_props(const AdmissibleSubset& J);

}  // namespace alcove
