// Acceptance suite: runs the full verification catalog over the built-in
// test set and prints one pass/fail line per criterion. Exit code is the
// number of failed criteria.
#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mdade/burnside.hpp"
#include "mdade/context.hpp"
#include "mdade/dade.hpp"
#include "mdade/lambda_ring.hpp"
#include "mdade/mackey.hpp"
#include "mdade/verify.hpp"
#include "oracles.hpp"

using namespace mdade;

namespace {

const std::vector<std::string> kBuiltins = {
    "C2",    "C4",    "C8",       "C16",   "C3",  "C9", "C27",
    "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "D8",  "Q8", "D16",
    "Q16",   "SD16",  "M16",      "He27"};

constexpr std::uint64_t kSeed = 20240901;

struct Criterion {
    int number;
    std::string label;
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

bool check_passed(const VerificationReport& rep, const std::string& id, std::string* witness) {
    for (const CheckResult& c : rep.checks)
        if (c.id == id) {
            if (witness) *witness = c.witness;
            return c.passed;
        }
    return false;
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();

    std::map<std::string, VerificationReport> reports;
    std::map<std::string, std::shared_ptr<const GroupContext>> ctxs;
    for (const std::string& g : kBuiltins) {
        reports.emplace(g, run_catalog(g, kSeed));
        ctxs.emplace(g, make_context(g));
    }

    std::vector<Criterion> criteria;

    {  // 1: the three rank routes agree, with exact spot values
        Criterion c{1, "kernel rank equals the non-cyclic subquotient count"};
        for (const std::string& g : kBuiltins)
            c.require(check_passed(reports.at(g), "kernel_rank", nullptr), g);
        const std::map<std::string, int> spots{{"C2xC2", 1}, {"D8", 4}, {"Q8", 2},
                                               {"C4", 0},    {"C8", 0}, {"C16", 0},
                                               {"C9", 0}};
        for (const auto& [g, want] : spots) {
            int got = lin_mu_kernel(*ctxs.at(g)).cols();
            std::ostringstream os;
            os << g << " kernel " << got << " != " << want;
            c.require(got == want, os.str());
        }
        criteria.push_back(c);
    }
    {  // 2: alpha is a square isomorphism and the index sets match
        Criterion c{2, "alpha isomorphism and the subquotient-class bijection"};
        for (const std::string& g : kBuiltins)
            c.require(check_passed(reports.at(g), "alpha_isomorphism", nullptr), g);
        c.require(sq_ss_bijection(*ctxs.at("C2xC2")).sq_count == 12, "C2xC2 count");
        c.require(sq_ss_bijection(*ctxs.at("C2xC2")).ss_count == 12, "C2xC2 count");
        c.require(sq_ss_bijection(*ctxs.at("D8")).sq_count == 24, "D8 count");
        c.require(sq_ss_bijection(*ctxs.at("D8")).ss_count == 24, "D8 count");
        criteria.push_back(c);
    }
    {  // 3: the two linearization routes agree exactly
        Criterion c{3, "direct and composed Mackey linearizations coincide"};
        for (const std::string& g : kBuiltins)
            c.require(check_passed(reports.at(g), "linearization_diagram", nullptr), g);
        criteria.push_back(c);
    }
    {  // 4: exactness at the rank level
        Criterion c{4, "rank plus kernel dimension exhausts the subquotient space"};
        for (const std::string& g : kBuiltins)
            c.require(check_passed(reports.at(g), "exact_sequence", nullptr), g);
        ExactMatrix lm = lin_mu_via_alpha(*ctxs.at("D8"));
        c.require(rank(lm) == 20, "D8 rank");
        c.require(rank(lm) + lin_mu_kernel(*ctxs.at("D8")).cols() == 24, "D8 total");
        criteria.push_back(c);
    }
    {  // 5: the deflation-restriction core is one-dimensional on the top class
        Criterion c{5, "the core of the Mackey-Dade space is the top syzygy line"};
        for (const std::string& g : kBuiltins)
            c.require(check_passed(reports.at(g), "syzygy_generator", nullptr), g);
        criteria.push_back(c);
    }
    {  // 6: restriction identities in the syzygy basis
        Criterion c{6, "syzygy restriction: normalizer index, vanishing, transitivity"};
        for (const std::string& g : kBuiltins)
            c.require(check_passed(reports.at(g), "dade_restriction", nullptr), g);
        criteria.push_back(c);
    }
    {  // 7: ring axioms of the subquotient ring
        Criterion c{7, "subquotient ring axioms and the Burnside embedding"};
        for (const std::string& g : kBuiltins)
            c.require(check_passed(reports.at(g), "subquotient_ring", nullptr), g);
        criteria.push_back(c);
    }
    {  // 8: the Burnside layer
        Criterion c{8, "mark homomorphism and the classical linearization kernel"};
        for (const std::string& g : kBuiltins)
            c.require(check_passed(reports.at(g), "burnside_marks", nullptr), g);
        ExactMatrix ker = lin_kernel(*ctxs.at("C2xC2"));
        c.require(ker.cols() == 1, "V4 kernel dimension");
        const long expected[] = {1, -1, -1, -1, 2};
        for (int i = 0; i < 5; ++i)
            c.require(ker.get(i, 0) == Rat(expected[i]), "V4 kernel vector");
        criteria.push_back(c);
    }
    {  // 9: the Mackey algebra presentation
        Criterion c{9, "Mackey algebra basis, relations and associativity"};
        for (const std::string& g : kBuiltins)
            c.require(check_passed(reports.at(g), "mackey_presentation", nullptr), g);
        c.require(build_algebra(make_context("C2")).dim() == 6, "dim mu(C2)");
        c.require(oracles::mackey_dim_bruteforce(make_group("C2")) == 6, "oracle mu(C2)");
        criteria.push_back(c);
    }
    {  // 10: bar and twin-dual behaviour
        Criterion c{10, "bar quotients, twin duality and deflation identities"};
        for (const std::string& g : kBuiltins)
            c.require(check_passed(reports.at(g), "bar_twin_dual", nullptr), g);
        criteria.push_back(c);
    }

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
                  << c.label;
        if (!c.ok) {
            std::cout << " -- " << c.detail;
            ++failures;
        }
        std::cout << "\n";
    }
    auto t1 = std::chrono::steady_clock::now();
    std::cout << "groups: " << kBuiltins.size() << ", elapsed "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms, " << (failures == 0 ? "all criteria passed" : "CRITERIA FAILED")
              << "\n";
    return failures;
}
