#include "alcove/gt.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alcove {

Weight GTPattern::shape() const {
    Weight s(n);
    for (int i = 1; i <= n; ++i) s[i - 1] = at(i, i);
    return s;
}

Weight SSYT::shape() const {
    Weight s(n, 0);
    for (size_t r = 0; r < rows.size(); ++r) s[r] = static_cast<int>(rows[r].size());
    return s;
}

void check_gt(const GTPattern& a) {
    if (a.n < 1 || static_cast<int>(a.a.size()) != a.n * (a.n + 1) / 2)
        throw std::invalid_argument("pattern has wrong size");
    for (int i = 1; i <= a.n; ++i)
        for (int j = i; j <= a.n; ++j) {
            if (a.at(i, j) < 0) throw std::invalid_argument("negative pattern entry");
            if (i < j) {
                if (a.at(i + 1, j) > a.at(i, j) || a.at(i, j) > a.at(i, j - 1))
                    throw std::invalid_argument("pattern interlacing fails at (" +
                                                std::to_string(i) + "," +
                                                std::to_string(j) + ")");
            }
        }
}

void check_ssyt(const SSYT& t) {
    if (static_cast<int>(t.rows.size()) > t.n)
        throw std::invalid_argument("tableau has too many rows");
    for (size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (r + 1 < t.rows.size() && t.rows[r + 1].size() > row.size())
            throw std::invalid_argument("tableau rows not weakly decreasing in length");
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1 || row[c] > t.n)
                throw std::invalid_argument("tableau entry out of range");
            if (c > 0 && row[c] < row[c - 1])
                throw std::invalid_argument("tableau row not weakly increasing");
            if (r > 0 && t.rows[r - 1][c] >= row[c])
                throw std::invalid_argument("tableau column not strictly increasing");
        }
    }
}

GTPattern gt_from_ssyt(const SSYT& t) {
    GTPattern a;
    a.n = t.n;
    a.a.assign(t.n * (t.n + 1) / 2, 0);
    for (int i = 1; i <= t.n; ++i)
        for (int j = i; j <= t.n; ++j) {
            int bound = t.n - j + i, count = 0;
            if (i <= static_cast<int>(t.rows.size()))
                for (int e : t.rows[i - 1])
                    if (e <= bound) ++count;
            a.at(i, j) = count;
        }
    return a;
}

SSYT ssyt_from_gt(const GTPattern& a) {
    SSYT t;
    t.n = a.n;
    for (int i = 1; i <= a.n; ++i) {
        std::vector<int> row;
        // # of letter m in row i = a_{i,n-m+i} - a_{i,n-m+i+1}, a_{i,n+1} := 0
        for (int m = i; m <= a.n; ++m) {
            int hi = a.at(i, a.n - m + i);
            int lo = a.n - m + i + 1 <= a.n ? a.at(i, a.n - m + i + 1) : 0;
            for (int c = 0; c < hi - lo; ++c) row.push_back(m);
        }
        if (!row.empty()) t.rows.push_back(std::move(row));
    }
    return t;
}

namespace {

struct WordLetter {
    int row, col;  // 0-based into rows
    int value;
};

// reading word: rows bottom to top, each left to right
std::vector<WordLetter> reading_word(const SSYT& t) {
    std::vector<WordLetter> out;
    for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r)
        for (int c = 0; c < static_cast<int>(t.rows[r].size()); ++c)
            out.push_back({r, c, t.rows[r][c]});
    return out;
}

// positions of unmatched p ('plus') and unmatched p+1 ('minus') in the
// signature rule: minus pushes, plus pops a pending minus when one exists
void signature(const std::vector<WordLetter>& word, int p,
               std::vector<int>& unmatched_plus, std::vector<int>& unmatched_minus) {
    for (int k = 0; k < static_cast<int>(word.size()); ++k) {
        if (word[k].value == p + 1) {
            unmatched_minus.push_back(k);
        } else if (word[k].value == p) {
            if (!unmatched_minus.empty())
                unmatched_minus.pop_back();
            else
                unmatched_plus.push_back(k);
        }
    }
}

}  // namespace

int ssyt_unmatched(const SSYT& t, int p, OpDir dir) {
    auto word = reading_word(t);
    std::vector<int> plus, minus;
    signature(word, p, plus, minus);
    return dir == OpDir::lower ? static_cast<int>(plus.size())
                               : static_cast<int>(minus.size());
}

std::optional<SSYT> ssyt_operator(const SSYT& t, int p, OpDir dir) {
    auto word = reading_word(t);
    std::vector<int> plus, minus;
    signature(word, p, plus, minus);
    SSYT out = t;
    if (dir == OpDir::lower) {
        if (plus.empty()) return std::nullopt;
        const WordLetter& w = word[plus.back()];
        out.rows[w.row][w.col] = p + 1;
    } else {
        if (minus.empty()) return std::nullopt;
        const WordLetter& w = word[minus.front()];
        out.rows[w.row][w.col] = p;
    }
    check_ssyt(out);
    return out;
}

Weight ssyt_content(const SSYT& t) {
    Weight w(t.n, 0);
    for (const auto& row : t.rows)
        for (int e : row) ++w[e - 1];
    return w;
}

StringDatum gt_string_formula(const GTPattern& a) {
    StringDatum s;
    s.n = a.n;
    s.d.assign(a.n * (a.n - 1) / 2, 0);
    for (int j = 2; j <= a.n; ++j)
        for (int i = 1; i < j; ++i) {
            int d = 0;
            for (int m = 1; m <= j - i; ++m) {
                int hi = a.at(m, m + a.n - j);
                int lo = m + a.n - j + 1 <= a.n ? a.at(m, m + a.n - j + 1) : 0;
                d += hi - lo;
            }
            s.d[iA_index(a.n, {i, j})] = d;
        }
    return s;
}

namespace {

void enumerate_ssyt_rec(SSYT& t, const Weight& lambda, int r, int c,
                        std::vector<SSYT>& out) {
    int n = t.n;
    int nrows = 0;
    while (nrows < n && lambda[nrows] > 0) ++nrows;
    if (r == nrows) {
        out.push_back(t);
        return;
    }
    if (c == lambda[r]) {
        enumerate_ssyt_rec(t, lambda, r + 1, 0, out);
        return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
    for (int e = lo; e <= n; ++e) {
        t.rows[r][c] = e;
        enumerate_ssyt_rec(t, lambda, r, c + 1, out);
    }
    t.rows[r][c] = 0;
}

}  // namespace

std::vector<SSYT> enumerate_ssyt(int n, const Weight& lambda) {
    check_partition(n, lambda);
    SSYT t;
    t.n = n;
    for (int r = 0; r < n; ++r)
        if (lambda[r] > 0) t.rows.emplace_back(lambda[r], 0);
    std::vector<SSYT> out;
    enumerate_ssyt_rec(t, lambda, 0, 0, out);
    return out;
}

namespace {

// fill display rows j = 2..n left to right; entry (i, j) with i + (j - i)
// running over the row is bounded by its two upper neighbors
void enumerate_gt_rec(GTPattern& a, int j, int i, std::vector<GTPattern>& out) {
    if (j > a.n) {
        out.push_back(a);
        return;
    }
    if (i > a.n - j + 1) {
        enumerate_gt_rec(a, j + 1, 1, out);
        return;
    }
    // display row j entry i is a_{i, i+j-1}; constraints from row j-1:
    // a_{i+1, i+j-1} <= a_{i, i+j-1} <= a_{i, i+j-2}
    int hi = a.at(i, i + j - 2);
    int lo = a.at(i + 1, i + j - 1);
    for (int v = lo; v <= hi; ++v) {
        a.at(i, i + j - 1) = v;
        enumerate_gt_rec(a, j, i + 1, out);
    }
}

}  // namespace

std::vector<GTPattern> enumerate_gt(int n, const Weight& lambda) {
    check_partition(n, lambda);
    GTPattern a = top_pattern(n, lambda);
    std::vector<GTPattern> out;
    enumerate_gt_rec(a, 2, 1, out);
    for (auto& p : out) check_gt(p);
    return out;
}

GTPattern top_pattern(int n, const Weight& lambda) {
    check_partition(n, lambda);
    GTPattern a;
    a.n = n;
    a.a.assign(n * (n + 1) / 2, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) a.at(i, j) = lambda[i - 1];
    return a;
}

std::string format_gt(const GTPattern& a) {
    std::ostringstream os;
    os << "(";
    for (int j = 1; j <= a.n; ++j) {
        if (j > 1) os << " / ";
        for (int m = 1; m <= a.n - j + 1; ++m) os << (m > 1 ? " " : "") << a.at(m, m + j - 1);
    }
    os << ")";
    return os.str();
}

GTPattern parse_gt(int n, const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
    GTPattern a;
    a.n = n;
    a.a.assign(n * (n + 1) / 2, 0);
    std::istringstream is(body);
    std::string rowtext;
    int j = 0;
    while (std::getline(is, rowtext, '/')) {
        ++j;
        if (j > n) throw std::invalid_argument("pattern has too many rows");
        std::istringstream rs(rowtext);
        int v, m = 0;
        while (rs >> v) {
            ++m;
            if (m > n - j + 1) throw std::invalid_argument("pattern row too long");
            a.at(m, m + j - 1) = v;
        }
        if (m != n - j + 1) throw std::invalid_argument("pattern row too short");
    }
    if (j != n) throw std::invalid_argument("pattern has too few rows");
    check_gt(a);
    return a;
}

std::string format_ssyt(const SSYT& t) {
    if (t.rows.empty()) return "-";
    std::ostringstream os;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        if (r) os << "/";
        for (size_t c = 0; c < t.rows[r].size(); ++c)
            os << (c ? " " : "") << t.rows[r][c];
    }
    return os.str();
}

SSYT parse_ssyt(int n, const std::string& s) {
    SSYT t;
    t.n = n;
    if (s == "-") return t;
    std::istringstream is(s);
    std::string rowtext;
    while (std::getline(is, rowtext, '/')) {
        std::istringstream rs(rowtext);
        std::vector<int> row;
        int v;
        while (rs >> v) row.push_back(v);
        t.rows.push_back(std::move(row));
    }
    check_ssyt(t);
    return t;
}

CrystalOracle ssyt_oracle(int n) {
    CrystalOracle ops;
    ops.n = n;
    ops.weight = [n](const Element& e) { return ssyt_content(parse_ssyt(n, e)); };
    auto step = [n](const Element& e, int p, OpDir dir) -> std::optional<Element> {
        auto r = ssyt_operator(parse_ssyt(n, e), p, dir);
        if (!r) return std::nullopt;
        return format_ssyt(*r);
    };
    ops.lower = [step](const Element& e, int p) { return step(e, p, OpDir::lower); };
    ops.raise = [step](const Element& e, int p) { return step(e, p, OpDir::raise); };
    return ops;
}

CrystalOracle gt_oracle(int n) {
    CrystalOracle ops;
    ops.n = n;
    ops.weight = [n](const Element& e) {
        return ssyt_content(ssyt_from_gt(parse_gt(n, e)));
    };
    auto step = [n](const Element& e, int p, OpDir dir) -> std::optional<Element> {
        auto r = ssyt_operator(ssyt_from_gt(parse_gt(n, e)), p, dir);
        if (!r) return std::nullopt;
        return format_gt(gt_from_ssyt(*r));
    };
    ops.lower = [step](const Element& e, int p) { return step(e, p, OpDir::lower); };
    ops.raise = [step](const Element& e, int p) { return step(e, p, OpDir::raise); };
    return ops;
}

CrystalGraph ssyt_crystal(int n, const Weight& lambda) {
    SSYT top;
    top.n = n;
    for (int r = 0; r < n; ++r)
        if (lambda[r] > 0) top.rows.emplace_back(lambda[r], r + 1);
    return generate_crystal(format_ssyt(top), ssyt_oracle(n));
}

CrystalGraph gt_crystal(int n, const Weight& lambda) {
    return generate_crystal(format_gt(top_pattern(n, lambda)), gt_oracle(n));
}

}  // namespace alcove
