#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "alcove/crystal.hpp"
#include "alcove/gamma.hpp"
#include "alcove/root_system.hpp"

namespace alcove {

using GammaPtr = std::shared_ptr<const GammaSequence>;

/// Index set J = {j_1 < ... < j_t} into a path whose reflections form a
/// saturated increasing chain e -> s_{beta_{j_1}} -> ... in Bruhat order.
/// Extended paths additionally require |J| = N with the chain ending at the
/// longest element.
struct AdmissibleSubset {
    GammaPtr path;
    std::vector<int> indices;  // 1-based, strictly increasing

    bool operator==(const AdmissibleSubset& o) const { return indices == o.indices; }
};

bool is_admissible(const GammaSequence& g, const std::vector<int>& indices);

/// All admissible subsets, sorted by size and then lexicographically.
std::vector<AdmissibleSubset> enumerate_admissible(GammaPtr g);

/// Folded gallery data: per position the folded wall (beta^J_i, l^J_i) and
/// the folded endpoint mu^J.  The straight gallery starts at mu = -lambda.
struct FoldedGallery {
    std::vector<Root> roots;   // beta^J_i normalized positive, 1-based via at()
    std::vector<int> levels;   // l^J_i with the same normalization
    Weight mu;                 // mu^J

    Root root(int i) const { return roots.at(i - 1); }
    int level(int i) const { return levels.at(i - 1); }
};

FoldedGallery fold(const AdmissibleSubset& J);

/// wt(J) = -mu^J; equal to -w(J)(-lambda), asserted internally.
Weight weight(const AdmissibleSubset& J);

/// Product s_{beta_{j_1}} ... s_{beta_{j_t}} (the chain endpoint wbar(J)).
WeylElement chain_end(const AdmissibleSubset& J);

/// Product of the crossed affine reflections s_{beta_{j_1}, l_{j_1}} ...
/// applied left to right, i.e. w(J) with earlier indices outermost.
AffineElement chain_affine(const AdmissibleSubset& J);

/// Internals of one operator application, exposed for property checks.
struct OperatorView {
    std::vector<int> I;      // positions with folded root alpha_p
    int weight_term = 0;     // (mu^J, alpha_p)
    int M = 0;               // min of folded levels on I and the weight term
    std::vector<int> hits;   // elements of I whose folded level equals M
};

OperatorView operator_view(const AdmissibleSubset& J, int p);

std::optional<AdmissibleSubset> root_operator_F(const AdmissibleSubset& J, int p);
std::optional<AdmissibleSubset> root_operator_E(const AdmissibleSubset& J, int p);

/// Phi: the extended admissible subset over extend_path(g, word) obtained by
/// appending the unique increasing saturated chain from chain_end(J) to the
/// longest element inside the appended reflection-order tail.
AdmissibleSubset extend_phi(const AdmissibleSubset& J, GammaPtr extended);

/// Psi: the same index set regarded inside rho_shift_concat(path(J)).
AdmissibleSubset embed_psi(const AdmissibleSubset& J, GammaPtr shifted);

/// The unique highest-weight admissible subset (empty set for ordinary paths).
AdmissibleSubset highest_admissible(GammaPtr g);

/// Serialization used for crystal element handles: "{1,2,5}" or "{}".
std::string subset_key(const AdmissibleSubset& J);
std::vector<int> parse_subset_key(const std::string& key);

/// Crystal oracle over admissible subsets of a fixed path.
CrystalOracle alcove_oracle(GammaPtr g);

/// The full crystal graph generated from the highest admissible subset.
CrystalGraph alcove_crystal(GammaPtr g);

}  // namespace alcove
