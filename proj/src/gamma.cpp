#include "alcove/gamma.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace alcove {

int GammaSequence::level(int i) const {
    int count = 0;
    for (int j = 1; j < i; ++j)
        if (roots[j - 1] == roots[i - 1]) ++count;
    return -count;
}

std::vector<int> GammaSequence::levels() const {
    std::map<Root, int> seen;
    std::vector<int> out;
    out.reserve(roots.size());
    for (Root b : roots) out.push_back(-seen[b]++);
    return out;
}

std::vector<GammaViolation> validate_gamma(const GammaSequence& g) {
    std::vector<GammaViolation> out;
    check_partition(g.n, g.lambda);
    const int extra = g.kind == PathKind::extended ? 1 : 0;
    std::map<Root, int> counts;
    for (Root b : g.roots) {
        if (b.i < 1 || b.i >= b.j || b.j > g.n) {
            out.push_back({"entry " + to_string(b) + " is not a positive root"});
            return out;
        }
        ++counts[b];
    }
    for (Root b : RootSystem(g.n).positive_roots()) {
        int want = pairing(g.lambda, b) + extra;
        if (counts[b] != want)
            out.push_back({"root " + to_string(b) + " occurs " +
                           std::to_string(counts[b]) + " times, expected " +
                           std::to_string(want)});
    }
    // interlacing: on each triple alpha, beta, gamma = alpha + beta, the
    // subsequence must place {alpha, beta} at odd positions and gamma at even
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j)
            for (int k = j + 1; k <= g.n; ++k) {
                Root a{i, j}, b{j, k}, c{i, k};
                int pos = 0;
                for (Root r : g.roots) {
                    if (r != a && r != b && r != c) continue;
                    ++pos;
                    bool odd = pos % 2 == 1;
                    if (odd == (r == c)) {
                        out.push_back({"interlacing fails on triple " + to_string(a) +
                                       "," + to_string(b) + "," + to_string(c) +
                                       " at subsequence position " + std::to_string(pos)});
                        break;
                    }
                }
            }
    return out;
}

GammaSequence gamma_lambda(int n, const Weight& lambda) {
    check_partition(n, lambda);
    GammaSequence g;
    g.n = n;
    g.lambda = lambda;
    g.kind = PathKind::extended;
    auto block = [&](int i) {
        // Gamma(i): rows m = i, i-1, ..., 1, each row eps_m - eps_n ... eps_m - eps_{i+1}
        for (int m = i; m >= 1; --m)
            for (int j = n; j >= i + 1; --j) g.roots.push_back({m, j});
    };
    for (int i = n - 1; i >= 1; --i) {
        int mult = lambda[i - 1] - lambda[i];
        for (int r = 0; r < mult; ++r) block(i);
        for (int j = n; j >= i + 1; --j) g.roots.push_back({i, j});
    }
    return g;
}

GammaSequence extend_path(const GammaSequence& g, const Word& word) {
    if (g.kind != PathKind::ordinary)
        throw std::invalid_argument("extend_path requires an ordinary path");
    if (!validate_gamma(g).empty())
        throw std::invalid_argument("extend_path requires a valid path");
    GammaSequence out = g;
    out.kind = PathKind::extended;
    for (Root b : reflection_order(g.n, word)) out.roots.push_back(b);
    return out;
}

namespace {

// v(alpha, l) = (1 / sum c_i)(-l, c_1, ..., c_{n-1}) with c_m = 1 for
// alpha.i <= m < alpha.j.  Lex comparison with exact cross-multiplied
// rationals; the denominators sum(c) = j - i are positive.
bool rho_lex_less(std::pair<Root, int> a, std::pair<Root, int> b) {
    int da = a.first.j - a.first.i;
    int db = b.first.j - b.first.i;
    auto coord = [](std::pair<Root, int> x, int k) {
        if (k == 0) return -x.second;
        return x.first.i <= k && k < x.first.j ? 1 : 0;
    };
    int n_coords = std::max(a.first.j, b.first.j);
    for (int k = 0; k < n_coords; ++k) {
        long lhs = static_cast<long>(coord(a, k)) * db;
        long rhs = static_cast<long>(coord(b, k)) * da;
        if (lhs != rhs) return lhs < rhs;
    }
    return false;
}

}  // namespace

RhoPath rho_lex_path(int n) {
    RootSystem rs(n);
    std::vector<std::pair<Root, int>> R;
    for (Root a : rs.positive_roots())
        for (int l = 0; l > -pairing(rho_weight(n), a); --l) R.push_back({a, l});
    std::sort(R.begin(), R.end(), [&](auto x, auto y) {
        return rho_lex_less({x.first, x.second}, {y.first, y.second});
    });
    RhoPath out;
    out.seq.n = n;
    out.seq.lambda = rho_weight(n);
    out.seq.kind = PathKind::ordinary;
    for (auto& [a, l] : R) out.seq.roots.push_back(a);
    out.marker = rs.num_positive();
    // sanity: the level sequence derived from multiplicities must reproduce R
    auto lv = out.seq.levels();
    for (size_t k = 0; k < R.size(); ++k)
        if (lv[k] != R[k].second)
            throw std::logic_error("rho path levels disagree with lex order");
    return out;
}

GammaSequence rho_shift_concat(const GammaSequence& g) {
    if (g.kind != PathKind::extended)
        throw std::invalid_argument("rho_shift_concat requires an extended path");
    RhoPath rho = rho_lex_path(g.n);
    GammaSequence out;
    out.n = g.n;
    out.lambda = add(g.lambda, rho_weight(g.n));
    out.kind = PathKind::ordinary;
    out.roots = g.roots;
    for (int i = rho.marker + 1; i <= rho.seq.size(); ++i)
        out.roots.push_back(rho.seq.root(i));
    return out;
}

std::string format_gamma(const GammaSequence& g) {
    std::ostringstream os;
    for (Root b : g.roots) os << b.i << " " << b.j << "\n";
    return os.str();
}

GammaSequence parse_gamma(int n, const Weight& lambda, PathKind kind,
                          std::istream& in) {
    GammaSequence g;
    g.n = n;
    g.lambda = lambda;
    g.kind = kind;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int i, j;
        if (!(ls >> i)) continue;  // blank line
        if (!(ls >> j)) throw std::invalid_argument("malformed path line: " + line);
        g.roots.push_back({i, j});
    }
    return g;
}

}  // namespace alcove
