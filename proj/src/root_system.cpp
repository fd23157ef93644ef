#include "alcove/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace alcove {

std::vector<Root> RootSystem::positive_roots() const {
    std::vector<Root> out;
    out.reserve(num_positive());
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) out.push_back({i, j});
    return out;
}

int pairing(const Weight& v, Root alpha) {
    return v.at(alpha.i - 1) - v.at(alpha.j - 1);
}

int root_pairing(Root beta, Root alpha) {
    int r = 0;
    if (beta.i == alpha.i) r += 1;
    if (beta.i == alpha.j) r -= 1;
    if (beta.j == alpha.i) r -= 1;
    if (beta.j == alpha.j) r += 1;
    return r;
}

SignedRoot reflect_root(Root beta, Root alpha) {
    auto swap_idx = [&](int t) {
        if (t == beta.i) return beta.j;
        if (t == beta.j) return beta.i;
        return t;
    };
    int a = swap_idx(alpha.i), b = swap_idx(alpha.j);
    if (a < b) return {{a, b}, 1};
    return {{b, a}, -1};
}

Weight root_vector(int n, Root alpha) {
    Weight v(n, 0);
    v[alpha.i - 1] = 1;
    v[alpha.j - 1] = -1;
    return v;
}

Weight add(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

Weight sub(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

Weight normalize_weight(Weight v) {
    if (v.empty()) return v;
    int last = v.back();
    for (auto& x : v) x -= last;
    return v;
}

bool weights_equal(const Weight& a, const Weight& b) {
    return a.size() == b.size() && normalize_weight(a) == normalize_weight(b);
}

void check_partition(int n, const Weight& lambda) {
    if (n < 2) throw std::invalid_argument("rank requires n >= 2");
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("partition must have length n");
    for (int i = 0; i + 1 < n; ++i)
        if (lambda[i] < lambda[i + 1])
            throw std::invalid_argument("partition must be weakly decreasing");
    if (lambda.back() != 0)
        throw std::invalid_argument("partition must end in 0");
}

Weight rho_weight(int n) {
    Weight r(n);
    for (int i = 0; i < n; ++i) r[i] = n - 1 - i;
    return r;
}

WeylElement::WeylElement(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
        if (x < 1 || x > static_cast<int>(img_.size()) || seen[x - 1])
            throw std::invalid_argument("not a permutation");
        seen[x - 1] = true;
    }
}

WeylElement WeylElement::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return WeylElement(std::move(v));
}

WeylElement WeylElement::reflection(int n, Root beta) {
    auto w = identity(n);
    std::swap(w.img_[beta.i - 1], w.img_[beta.j - 1]);
    return w;
}

WeylElement WeylElement::longest(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return WeylElement(std::move(v));
}

WeylElement WeylElement::compose(const WeylElement& other) const {
    std::vector<int> v(img_.size());
    for (size_t k = 0; k < img_.size(); ++k) v[k] = img_[other.img_[k] - 1];
    return WeylElement(std::move(v));
}

WeylElement WeylElement::inverse() const {
    std::vector<int> v(img_.size());
    for (size_t k = 0; k < img_.size(); ++k) v[img_[k] - 1] = static_cast<int>(k) + 1;
    return WeylElement(std::move(v));
}

WeylElement WeylElement::times_reflection(Root beta) const {
    WeylElement w = *this;
    std::swap(w.img_[beta.i - 1], w.img_[beta.j - 1]);
    return w;
}

int WeylElement::length() const {
    int inv = 0;
    for (size_t a = 0; a < img_.size(); ++a)
        for (size_t b = a + 1; b < img_.size(); ++b)
            if (img_[a] > img_[b]) ++inv;
    return inv;
}

Weight WeylElement::apply(const Weight& v) const {
    Weight r(v.size());
    for (size_t k = 0; k < v.size(); ++k) r[img_[k] - 1] = v[k];
    return r;
}

SignedRoot WeylElement::apply(Root alpha) const {
    int a = img_[alpha.i - 1], b = img_[alpha.j - 1];
    if (a < b) return {{a, b}, 1};
    return {{b, a}, -1};
}

bool WeylElement::is_transposition() const {
    int moved = 0;
    for (size_t k = 0; k < img_.size(); ++k)
        if (img_[k] != static_cast<int>(k) + 1) ++moved;
    return moved == 2;
}

AffineElement::AffineElement(WeylElement lin, Weight trans)
    : lin_(std::move(lin)), trans_(std::move(trans)) {
    if (static_cast<int>(trans_.size()) != lin_.n())
        throw std::invalid_argument("affine element size mismatch");
}

AffineElement AffineElement::identity(int n) {
    return AffineElement(WeylElement::identity(n), Weight(n, 0));
}

AffineElement AffineElement::translation(const Weight& nu) {
    return AffineElement(WeylElement::identity(static_cast<int>(nu.size())), nu);
}

AffineElement AffineElement::affine_reflection(int n, Root alpha, int level) {
    Weight nu = root_vector(n, alpha);
    for (auto& x : nu) x *= level;
    return AffineElement(WeylElement::reflection(n, alpha), std::move(nu));
}

AffineElement AffineElement::compose(const AffineElement& other) const {
    // (t_a u)(t_b v) = t_{a + u(b)} (uv)
    return AffineElement(lin_.compose(other.lin_), add(trans_, lin_.apply(other.trans_)));
}

Weight AffineElement::apply(const Weight& v) const { return add(lin_.apply(v), trans_); }

Hyperplane AffineElement::apply(Hyperplane h) const {
    // t_nu w : H_{alpha,k} -> H_{w(alpha), k + (nu, w(alpha))}
    SignedRoot im = lin_.apply(h.root);
    int level = h.level + pairing(trans_, im.root) * im.sign;
    return {im.root, im.sign * level};
}

Hyperplane reflect_hyperplane(Root beta, int l, Hyperplane h) {
    SignedRoot im = reflect_root(beta, h.root);
    int level = h.level - l * root_pairing(beta, h.root);
    return {im.root, im.sign * level};
}

std::vector<Root> reflection_order(int n, const Word& word) {
    RootSystem rs(n);
    const int N = rs.num_positive();
    if (static_cast<int>(word.size()) != N)
        throw std::invalid_argument("not a reduced word: wrong length");
    auto w = WeylElement::identity(n);
    std::vector<Root> betas;
    betas.reserve(N);
    for (int p : word) {
        if (p < 1 || p >= n) throw std::invalid_argument("word letter out of range");
        betas.push_back(w.apply(rs.simple(p)).root);
        auto next = w.times_reflection(rs.simple(p));
        if (next.length() != w.length() + 1)
            throw std::invalid_argument("not a reduced word");
        w = next;
    }
    if (!(w == WeylElement::longest(n)))
        throw std::invalid_argument("not a reduced word for the longest element");
    return betas;
}

Word iA_word(int n) {
    if (n < 2) throw std::invalid_argument("rank requires n >= 2");
    Word w;
    for (int j = 2; j <= n; ++j)
        for (int p = j - 1; p >= 1; --p) w.push_back(p);
    return w;
}

int iA_index(int n, Root alpha) {
    // roots sorted by (j, i): those with smaller j come first
    return (alpha.j - 1) * (alpha.j - 2) / 2 + (alpha.i - 1);
}

bool iA_less(Root a, Root b) {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
}

bool bruhat_is_cover(const WeylElement& w, const WeylElement& wp) {
    if (wp.length() != w.length() + 1) return false;
    return w.inverse().compose(wp).is_transposition();
}

std::string to_string(Root alpha) {
    return "(" + std::to_string(alpha.i) + "," + std::to_string(alpha.j) + ")";
}

std::string to_string(const Weight& v) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << ")";
    return os.str();
}

}  // namespace alcove
