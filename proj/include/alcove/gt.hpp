#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alcove/crystal.hpp"
#include "alcove/root_system.hpp"

namespace alcove {

/// Gelfand-Tsetlin pattern (a_{i,j})_{1 <= i <= j <= n}; a_{i,i} = lambda_i
/// and a_{i+1,j} <= a_{i,j} <= a_{i,j-1}.  Displayed as rows
/// (a_{1,j}, a_{2,j+1}, ..., a_{n-j+1,n}) for j = 1..n.
struct GTPattern {
    int n = 0;
    std::vector<int> a;  // flat upper-triangular storage

    int& at(int i, int j) { return a.at(flat(i, j)); }
    int at(int i, int j) const { return a.at(flat(i, j)); }
    Weight shape() const;

    bool operator==(const GTPattern&) const = default;

  private:
    int flat(int i, int j) const { return (i - 1) * n - (i - 1) * i / 2 + (j - 1); }
};

/// Semistandard Young tableau with entries in {1,...,n}; rows weakly
/// increasing, columns strictly increasing.
struct SSYT {
    int n = 0;
    std::vector<std::vector<int>> rows;

    Weight shape() const;
    bool operator==(const SSYT&) const = default;
};

void check_gt(const GTPattern& a);  // throws std::invalid_argument
void check_ssyt(const SSYT& t);    // throws std::invalid_argument

/// a_{i,j} = #{ boxes (i,l) with T(i,l) <= n-j+i }.
GTPattern gt_from_ssyt(const SSYT& t);
SSYT ssyt_from_gt(const GTPattern& a);

enum class OpDir { raise, lower };

/// Signature-rule crystal operator on the row reading word (rows bottom to
/// top, each row left to right).  Lowering changes the rightmost unmatched
/// letter p to p+1; raising changes the leftmost unmatched p+1 to p.
std::optional<SSYT> ssyt_operator(const SSYT& t, int p, OpDir dir);

/// Number of unmatched letters: phi_p for lower, eps_p for raise.
int ssyt_unmatched(const SSYT& t, int p, OpDir dir);

/// Content of the tableau as a weight (count of each letter).
Weight ssyt_content(const SSYT& t);

/// Closed-form i_A-string datum: d_{i,j} = sum_{m=1}^{j-i}
/// (a_{m,m+n-j} - a_{m,m+n-j+1}).
StringDatum gt_string_formula(const GTPattern& a);

/// Brute-force enumerations, used as independent oracles.
std::vector<SSYT> enumerate_ssyt(int n, const Weight& lambda);
std::vector<GTPattern> enumerate_gt(int n, const Weight& lambda);

/// The highest-weight pattern (a_{i,j} = lambda_i everywhere).
GTPattern top_pattern(int n, const Weight& lambda);

std::string format_gt(const GTPattern& a);     // "(2 1 0 / 2 1 / 2)"
GTPattern parse_gt(int n, const std::string& s);
std::string format_ssyt(const SSYT& t);        // "1 1/2", empty "-"
SSYT parse_ssyt(int n, const std::string& s);

/// Crystal oracles over the serialized forms above.
CrystalOracle ssyt_oracle(int n);
CrystalOracle gt_oracle(int n);

CrystalGraph ssyt_crystal(int n, const Weight& lambda);
CrystalGraph gt_crystal(int n, const Weight& lambda);

}  // namespace alcove
