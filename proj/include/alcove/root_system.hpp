#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

/// Integral weight in the epsilon basis.  Two weights are considered equal
/// when they differ by a multiple of the all-ones vector; use
/// normalize_weight / weights_equal for such comparisons.
using Weight = std::vector<int>;

/// Sequence of simple-reflection indices in {1,...,n-1}.
using Word = std::vector<int>;

/// Positive root eps_i - eps_j of type A_{n-1}, 1 <= i < j <= n.
struct Root {
    int i = 0;
    int j = 0;
    auto operator<=>(const Root&) const = default;
};

/// A root with an orientation sign, the result of reflecting a positive root.
struct SignedRoot {
    Root root;
    int sign = 1;  // +1 if the image was already positive, -1 if it was negated
};

/// Affine hyperplane H_{alpha,k}; normalized so that root is positive
/// (H_{-alpha,-k} is identified with H_{alpha,k}).
struct Hyperplane {
    Root root;
    int level = 0;
    auto operator<=>(const Hyperplane&) const = default;
};

struct RootSystem {
    int n;

    explicit RootSystem(int n_) : n(n_) {
        if (n < 2) throw std::invalid_argument("rank requires n >= 2");
    }

    int num_positive() const { return n * (n - 1) / 2; }
    Root simple(int p) const { return {p, p + 1}; }
    Root highest() const { return {1, n}; }

    /// All positive roots, listed in the i_A reflection order (sorted by j, then i).
    std::vector<Root> positive_roots() const;
};

/// (v, alpha^vee) = x_i - x_j for alpha = eps_i - eps_j.
int pairing(const Weight& v, Root alpha);

/// (beta, alpha^vee) for two positive roots.
int root_pairing(Root beta, Root alpha);

/// s_beta(alpha), with the sign of the (possibly negative) image.
SignedRoot reflect_root(Root beta, Root alpha);

/// Coordinate vector of a positive root (+1 at i-1, -1 at j-1).
Weight root_vector(int n, Root alpha);

Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);

/// Canonical representative modulo the all-ones vector (last coordinate 0).
Weight normalize_weight(Weight v);
bool weights_equal(const Weight& a, const Weight& b);

/// Checks that lambda is a partition for rank n: weakly decreasing,
/// nonnegative, length n, last entry 0.  Throws std::invalid_argument.
void check_partition(int n, const Weight& lambda);

/// rho for the normalization lambda_n = 0: (n-1, n-2, ..., 0).
Weight rho_weight(int n);

/// Finite Weyl element as a one-line permutation of {1,...,n}.
class WeylElement {
  public:
    explicit WeylElement(std::vector<int> one_line);
    static WeylElement identity(int n);
    static WeylElement reflection(int n, Root beta);
    static WeylElement longest(int n);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    /// (this o other)(i) = this(other(i)).
    WeylElement compose(const WeylElement& other) const;
    WeylElement inverse() const;
    /// Right multiplication by s_beta: w |-> w s_beta.
    WeylElement times_reflection(Root beta) const;

    /// Coxeter length = inversion count.
    int length() const;
    Weight apply(const Weight& v) const;
    SignedRoot apply(Root alpha) const;

    bool is_transposition() const;

    bool operator==(const WeylElement&) const = default;
    auto operator<=>(const WeylElement&) const = default;

  private:
    std::vector<int> img_;  // img_[k] = w(k+1)
};

/// Element t_nu o wbar of the affine Weyl group (translations by the full
/// weight lattice are allowed): v |-> wbar(v) + nu.
class AffineElement {
  public:
    AffineElement(WeylElement lin, Weight trans);
    static AffineElement identity(int n);
    static AffineElement translation(const Weight& nu);
    /// s_{alpha,k} = t_{k alpha} s_alpha.
    static AffineElement affine_reflection(int n, Root alpha, int level);

    const WeylElement& linear() const { return lin_; }
    const Weight& translation_part() const { return trans_; }

    AffineElement compose(const AffineElement& other) const;
    Weight apply(const Weight& v) const;
    Hyperplane apply(Hyperplane h) const;

    bool operator==(const AffineElement&) const = default;

  private:
    WeylElement lin_;
    Weight trans_;
};

/// s_{beta,l}(H_{alpha,k}) = H_{s_beta(alpha), k - l (beta, alpha^vee)},
/// re-normalized to a positive root.
Hyperplane reflect_hyperplane(Root beta, int l, Hyperplane h);

/// Positive roots beta_1 = alpha_{i_1}, beta_j = s_{i_1}...s_{i_{j-1}}(alpha_{i_j})
/// of a reduced word for the longest element.  Throws if the word is not reduced.
std::vector<Root> reflection_order(int n, const Word& word);

/// The reduced word (1, 2,1, 3,2,1, ..., n-1,...,1).
Word iA_word(int n);

/// Position of a positive root in the i_A reflection order (0-based).
int iA_index(int n, Root alpha);

/// alpha < beta in the i_A order, i.e. (j, i) lexicographic.
bool iA_less(Root a, Root b);

/// True iff w' covers w in Bruhat order: w' = w s_beta with l(w') = l(w) + 1.
bool bruhat_is_cover(const WeylElement& w, const WeylElement& wp);

std::string to_string(Root alpha);
std::string to_string(const Weight& v);

}  // namespace alcove
