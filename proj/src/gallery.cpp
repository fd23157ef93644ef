#include "alcove/gallery.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace alcove {

bool is_admissible(const GammaSequence& g, const std::vector<int>& indices) {
    auto w = WeylElement::identity(g.n);
    int prev = 0;
    for (int j : indices) {
        if (j <= prev || j > g.size()) return false;
        prev = j;
        auto next = w.times_reflection(g.root(j));
        if (next.length() != w.length() + 1) return false;
        w = next;
    }
    if (g.kind == PathKind::extended)
        return static_cast<int>(indices.size()) == RootSystem(g.n).num_positive() &&
               w == WeylElement::longest(g.n);
    return true;
}

namespace {

void enumerate_rec(const GammaPtr& g, int from, std::vector<int>& cur,
                   const WeylElement& w, std::vector<AdmissibleSubset>& out) {
    const int N = RootSystem(g->n).num_positive();
    const bool extended = g->kind == PathKind::extended;
    if (!extended)
        out.push_back({g, cur});
    else if (static_cast<int>(cur.size()) == N && w == WeylElement::longest(g->n))
        out.push_back({g, cur});
    if (extended && (static_cast<int>(cur.size()) >= N ||
                     N - static_cast<int>(cur.size()) > g->size() - from + 1))
        return;
    for (int j = from; j <= g->size(); ++j) {
        auto next = w.times_reflection(g->root(j));
        if (next.length() != w.length() + 1) continue;
        cur.push_back(j);
        enumerate_rec(g, j + 1, cur, next, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<AdmissibleSubset> enumerate_admissible(GammaPtr g) {
    std::vector<AdmissibleSubset> out;
    std::vector<int> cur;
    enumerate_rec(g, 1, cur, WeylElement::identity(g->n), out);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.indices.size() < b.indices.size();
    });
    return out;
}

FoldedGallery fold(const AdmissibleSubset& J) {
    const GammaSequence& g = *J.path;
    FoldedGallery out;
    out.roots.reserve(g.size());
    out.levels.reserve(g.size());
    auto levels = g.levels();
    auto running = AffineElement::identity(g.n);
    size_t next = 0;
    for (int i = 1; i <= g.size(); ++i) {
        Hyperplane h = running.apply({g.root(i), levels[i - 1]});
        out.roots.push_back(h.root);
        out.levels.push_back(h.level);
        if (next < J.indices.size() && J.indices[next] == i) {
            running = running.compose(
                AffineElement::affine_reflection(g.n, g.root(i), levels[i - 1]));
            ++next;
        }
    }
    Weight mu = g.lambda;
    for (auto& x : mu) x = -x;
    out.mu = running.apply(mu);
    return out;
}

Weight weight(const AdmissibleSubset& J) {
    Weight w = fold(J).mu;
    for (auto& x : w) x = -x;
    return normalize_weight(w);
}

WeylElement chain_end(const AdmissibleSubset& J) {
    auto w = WeylElement::identity(J.path->n);
    for (int j : J.indices) w = w.times_reflection(J.path->root(j));
    return w;
}

AffineElement chain_affine(const AdmissibleSubset& J) {
    const GammaSequence& g = *J.path;
    auto levels = g.levels();
    auto w = AffineElement::identity(g.n);
    for (int j : J.indices)
        w = w.compose(AffineElement::affine_reflection(g.n, g.root(j), levels[j - 1]));
    return w;
}

OperatorView operator_view(const AdmissibleSubset& J, int p) {
    const GammaSequence& g = *J.path;
    FoldedGallery f = fold(J);
    OperatorView v;
    Root alpha_p{p, p + 1};
    v.weight_term = pairing(f.mu, alpha_p);
    v.M = v.weight_term;
    for (int i = 1; i <= g.size(); ++i)
        if (f.root(i) == alpha_p) {
            v.I.push_back(i);
            v.M = std::min(v.M, f.level(i));
        }
    for (int i : v.I)
        if (f.level(i) == v.M) v.hits.push_back(i);
    return v;
}

namespace {

AdmissibleSubset replace_index(const AdmissibleSubset& J, int remove, int insert) {
    AdmissibleSubset out = J;
    if (remove)
        out.indices.erase(std::find(out.indices.begin(), out.indices.end(), remove));
    if (insert) {
        out.indices.insert(
            std::upper_bound(out.indices.begin(), out.indices.end(), insert), insert);
    }
    if (!is_admissible(*out.path, out.indices))
        throw std::logic_error("crystal operator produced a non-admissible subset");
    return out;
}

}  // namespace

std::optional<AdmissibleSubset> root_operator_F(const AdmissibleSubset& J, int p) {
    OperatorView v = operator_view(J, p);
    const bool extended = J.path->kind == PathKind::extended;
    if (v.M >= 0) {
        assert(!extended || v.M == 0);
        return std::nullopt;
    }
    if (!v.hits.empty()) {
        int m_F = v.hits.front();
        auto it = std::lower_bound(v.I.begin(), v.I.end(), m_F);
        assert(it != v.I.begin());
        int k_F = *std::prev(it);
        return replace_index(J, m_F, k_F);
    }
    assert(!extended);
    int k_prime = v.I.empty() ? 0 : v.I.back();
    if (k_prime == 0) throw std::logic_error("F case split reached with empty I");
    return replace_index(J, 0, k_prime);
}

std::optional<AdmissibleSubset> root_operator_E(const AdmissibleSubset& J, int p) {
    OperatorView v = operator_view(J, p);
    const bool extended = J.path->kind == PathKind::extended;
    if (v.M == v.weight_term) return std::nullopt;
    int k_E = v.hits.back();
    int k_prime = v.I.back();
    if (k_E != k_prime) {
        auto it = std::upper_bound(v.I.begin(), v.I.end(), k_E);
        int m_E = *it;
        return replace_index(J, k_E, m_E);
    }
    assert(!extended);
    return replace_index(J, k_prime, 0);
}

namespace {

// unique increasing saturated chain from w to the longest element along the
// appended tail positions lo..hi; found by depth-first search, asserting a
// single solution exists
bool tail_chain(const GammaSequence& g, const WeylElement& w, int from, int hi,
                std::vector<int>& acc) {
    if (w == WeylElement::longest(g.n)) return true;
    for (int j = from; j <= hi; ++j) {
        auto next = w.times_reflection(g.root(j));
        if (next.length() != w.length() + 1) continue;
        acc.push_back(j);
        if (tail_chain(g, next, j + 1, hi, acc)) return true;
        acc.pop_back();
    }
    return false;
}

}  // namespace

AdmissibleSubset extend_phi(const AdmissibleSubset& J, GammaPtr extended) {
    const GammaSequence& g = *J.path;
    const GammaSequence& ge = *extended;
    if (ge.kind != PathKind::extended || ge.size() < g.size() ||
        !std::equal(g.roots.begin(), g.roots.end(), ge.roots.begin()))
        throw std::invalid_argument("extend_phi: path is not an extension");
    AdmissibleSubset out{extended, J.indices};
    if (!tail_chain(ge, chain_end(J), g.size() + 1, ge.size(), out.indices))
        throw std::logic_error("extend_phi: no increasing chain to the longest element");
    if (!is_admissible(ge, out.indices))
        throw std::logic_error("extend_phi produced a non-admissible subset");
    return out;
}

AdmissibleSubset embed_psi(const AdmissibleSubset& J, GammaPtr shifted) {
    if (shifted->kind != PathKind::ordinary ||
        !std::equal(J.path->roots.begin(), J.path->roots.end(),
                    shifted->roots.begin()))
        throw std::invalid_argument("embed_psi: path is not the rho-shifted extension");
    AdmissibleSubset out{shifted, J.indices};
    if (!is_admissible(*shifted, out.indices))
        throw std::logic_error("embed_psi produced a non-admissible subset");
    return out;
}

AdmissibleSubset highest_admissible(GammaPtr g) {
    if (g->kind == PathKind::ordinary) return {g, {}};
    // the unique subset of weight lambda; found by raising any element to the top
    auto all = enumerate_admissible(g);
    if (all.empty()) throw std::logic_error("no admissible subsets");
    AdmissibleSubset cur = all.front();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int p = 1; p < g->n && !moved; ++p)
            if (auto up = root_operator_E(cur, p)) {
                cur = *up;
                moved = true;
            }
    }
    return cur;
}

std::string subset_key(const AdmissibleSubset& J) {
    std::ostringstream os;
    os << "{";
    for (size_t k = 0; k < J.indices.size(); ++k) os << (k ? "," : "") << J.indices[k];
    os << "}";
    return os.str();
}

std::vector<int> parse_subset_key(const std::string& key) {
    std::vector<int> out;
    std::string body = key.substr(1, key.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

CrystalOracle alcove_oracle(GammaPtr g) {
    CrystalOracle ops;
    ops.n = g->n;
    auto decode = [g](const Element& e) {
        return AdmissibleSubset{g, parse_subset_key(e)};
    };
    ops.weight = [decode](const Element& e) { return weight(decode(e)); };
    ops.lower = [decode](const Element& e, int p) -> std::optional<Element> {
        auto r = root_operator_F(decode(e), p);
        if (!r) return std::nullopt;
        return subset_key(*r);
    };
    ops.raise = [decode](const Element& e, int p) -> std::optional<Element> {
        auto r = root_operator_E(decode(e), p);
        if (!r) return std::nullopt;
        return subset_key(*r);
    };
    return ops;
}

CrystalGraph alcove_crystal(GammaPtr g) {
    return generate_crystal(subset_key(highest_admissible(g)), alcove_oracle(g));
}

}  // namespace alcove
