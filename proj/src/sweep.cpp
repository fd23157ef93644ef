#include "alcove/sweep.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

#include "alcove/gallery.hpp"
#include "alcove/gt.hpp"
#include "alcove/isomorphism.hpp"

namespace alcove {

namespace {

void partitions_rec(int n, int remaining, int cap, Weight& cur,
                    std::vector<Job>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        Weight lambda = cur;
        lambda.push_back(0);
        if (std::is_sorted(lambda.rbegin(), lambda.rend())) out.push_back({n, lambda});
        return;
    }
    for (int v = 0; v <= std::min(remaining, cap); ++v) {
        cur.push_back(v);
        partitions_rec(n, remaining - v, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Job> desk_jobs(int max_n, int max_size) {
    std::vector<Job> out;
    for (int n = 2; n <= max_n; ++n) {
        Weight cur;
        partitions_rec(n, max_size, max_size, cur, out);
    }
    return out;
}

SuiteResult run_suite(const Job& job) {
    SuiteResult res{job, {}};
    auto fail = [&](const std::string& what) { res.violations.push_back(what); };
    try {
        const int n = job.n;
        const Weight& lambda = job.lambda;

        auto path = std::make_shared<GammaSequence>(gamma_lambda(n, lambda));
        if (!validate_gamma(*path).empty()) fail("gamma_lambda fails validation");

        CrystalGraph alcove_g = alcove_crystal(path);
        CrystalGraph gt_g = gt_crystal(n, lambda);
        CrystalGraph ssyt_g = ssyt_crystal(n, lambda);
        for (auto* g : {&alcove_g, &gt_g, &ssyt_g})
            for (const auto& item : verify_crystal_axioms(*g).items)
                fail("axiom failure: " + item.axiom + " at " + item.witness);

        // character equality across the three models
        if (character(alcove_g) != character(gt_g) ||
            character(gt_g) != character(ssyt_g))
            fail("character multisets disagree");

        // element count against the brute-force tableau oracle
        auto all_ssyt = enumerate_ssyt(n, lambda);
        auto all_subsets = enumerate_admissible(path);
        if (all_ssyt.size() != alcove_g.elements.size() ||
            all_ssyt.size() != all_subsets.size())
            fail("element counts disagree with brute-force enumeration");
        if (enumerate_gt(n, lambda).size() != all_ssyt.size())
            fail("pattern count disagrees with tableau count");

        // main theorem: J -> (lambda_i - N_{i,j}(J)) is a bijection
        // commuting with every operator edge
        std::map<std::string, std::string> image;
        for (const auto& J : all_subsets) {
            GTPattern a = gt_from_admissible(J);
            image[subset_key(J)] = format_gt(a);
            // bijectivity round trip
            if (!(admissible_from_gt(path, a) == J))
                fail("J(a(J)) != J at " + subset_key(J));
            // closed-form string data on both sides
            StringDatum sj = admissible_string_datum(J);
            if (sj.d != admissible_string_formula(n, n_stats(J)).d)
                fail("alcove string formula mismatch at " + subset_key(J));
            if (sj.d != gt_string_formula(a).d)
                fail("pattern string formula mismatch at " + subset_key(J));
            // structural property sweep
            for (const auto& w : verify_decreasing_props(J).failures) fail(w);
        }
        std::vector<std::string> values;
        for (const auto& [k, v] : image) values.push_back(v);
        std::sort(values.begin(), values.end());
        if (std::adjacent_find(values.begin(), values.end()) != values.end())
            fail("main-theorem map is not injective");
        for (const auto& J : all_subsets)
            for (int p = 1; p < n; ++p) {
                auto down = root_operator_F(J, p);
                auto gt_down =
                    gt_oracle(n).lower(image.at(subset_key(J)), p);
                bool both = down.has_value() == gt_down.has_value();
                if (!both ||
                    (down && image.at(subset_key(*down)) != *gt_down))
                    fail("edge mismatch at " + subset_key(J) + " color " +
                         std::to_string(p));
            }
    } catch (const std::exception& e) {
        fail(std::string("exception: ") + e.what());
    }
    return res;
}

std::vector<SuiteResult> run_all(const std::vector<Job>& jobs, bool parallel) {
    std::vector<SuiteResult> out(jobs.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < static_cast<int>(jobs.size()); ++k)
            out[k] = run_suite(jobs[k]);
    } else {
        for (size_t k = 0; k < jobs.size(); ++k) out[k] = run_suite(jobs[k]);
    }
    return out;
}

}  // namespace alcove
