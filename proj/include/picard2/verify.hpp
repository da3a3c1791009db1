#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "picard2/mat2.hpp"
#include "picard2/numeric.hpp"
#include "picard2/quadext.hpp"

namespace picard2 {

/// Expected values for the reproduction suite. Defaults carry the
/// shipped table; load_fixtures replaces them from a JSON file.
struct Fixtures {
    int version = 1;
    IntMat2 gram_of_span{4, 8, 8, 4};
    std::array<int, 3> signature_big{3, 20, 0};
    std::array<int, 3> signature_sub{1, 1, 0};
    std::array<int, 3> signature_complement{2, 19, 0};
    std::vector<Int> absent_wall_norms{-2, -10};
    Int obstruction_modulus = 4;
    Int isotropic_radicand = 3;
    std::vector<Int> ci_coeffs{2, 6, 6, 2};
    IntMat2 tau1{1, 6, 0, -1};
    IntMat2 tau2{-1, 0, 6, 1};
    IntMat2 tau_product{35, 6, -6, -1};
    QuadExt top_eigenvalue{Rat(17), Rat(12), Int(2)};
    int chamber_depth = 4;
    int chamber_count = 9;
    QuadExt limit_ray1_u{Rat(3), Rat(2), Int(2)}, limit_ray1_v{Rat(-1)};
    QuadExt limit_ray2_u{Rat(-1)}, limit_ray2_v{Rat(3), Rat(2), Int(2)};
    std::vector<Rat> convergence_slopes{Rat(6), Rat(35, 6), Rat(204, 35)};
    int gap_depth = 4;
    Rat gap_bound{1, 1000};
    std::pair<Int, Int> c2_values{44, 44};
    std::pair<Int, Int> rational_curve_ray{1, 0};
};

Fixtures load_fixtures(const std::string& path);

struct CheckResult {
    std::string name;
    int section = 0;  // 5 or 6
    bool passed = false;
    std::string expected, actual;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    int passed_count() const {
        int n = 0;
        for (const auto& c : checks) n += c.passed;
        return n;
    }
};

/// Runs the reproduction suite, optionally restricted to one section.
VerifyReport run_paper_verify(const Fixtures& fx, std::optional<int> section = std::nullopt);

/// Throws CheckFailed naming the first failed check.
void require_all_passed(const VerifyReport& report);

}  // namespace picard2
