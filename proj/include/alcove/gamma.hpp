#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "alcove/root_system.hpp"

namespace alcove {

enum class PathKind { ordinary, extended };

/// A reduced alcove path from the fundamental alcove, represented by the
/// sequence of positive roots of the crossed walls.  The wall levels are
/// determined by the roots: l_i = -#{ j < i : beta_j = beta_i }.
struct GammaSequence {
    int n = 0;
    Weight lambda;
    PathKind kind = PathKind::ordinary;
    std::vector<Root> roots;

    int size() const { return static_cast<int>(roots.size()); }
    Root root(int i) const { return roots.at(i - 1); }  // 1-based
    int level(int i) const;                             // 1-based
    std::vector<int> levels() const;
};

struct GammaViolation {
    std::string what;  // human-readable description naming roots/positions
};

/// Checks the two characterization conditions for the declared kind:
/// every positive root beta occurs (lambda, beta) times (ordinary) or
/// (lambda, beta) + 1 times (extended), and for each triple gamma = alpha +
/// beta the subsequence on {alpha, beta, gamma} alternates between {alpha,
/// beta} at odd positions and gamma at even positions.
std::vector<GammaViolation> validate_gamma(const GammaSequence& g);

/// The canonical extended path Pi(lambda): the concatenation of the blocks
/// Gamma(n-1)^{lambda_{n-1}} (eps_{n-1}-eps_n) ... Gamma(1)^{lambda_1-lambda_2}
/// (eps_1-eps_n, ..., eps_1-eps_2).
GammaSequence gamma_lambda(int n, const Weight& lambda);

/// Appends the reflection order of a reduced word for the longest element,
/// turning an ordinary path for lambda into an extended one.
GammaSequence extend_path(const GammaSequence& g, const Word& word);

/// Ordinary path for rho built by lex-sorting R = {(alpha, l) :
/// -(rho, alpha) < l <= 0} along v(alpha, l).  Its first `marker` = N steps
/// form a reflection order, so the walk reaches the opposite alcove there.
struct RhoPath {
    GammaSequence seq;
    int marker = 0;
};
RhoPath rho_lex_path(int n);

/// Gamma(Pi''): the extended path for lambda followed by the post-marker tail
/// of the rho path; ordinary-valid for lambda + rho.
GammaSequence rho_shift_concat(const GammaSequence& g);

/// Text format: one root per line as "i j".
std::string format_gamma(const GammaSequence& g);
GammaSequence parse_gamma(int n, const Weight& lambda, PathKind kind,
                          std::istream& in);

}  // namespace alcove
