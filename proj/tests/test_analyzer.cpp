#include <doctest.h>

#include <maslovkit/analyzer.hpp>

using maslovkit::Case1;
using maslovkit::Case2;
using maslovkit::Case3;
using maslovkit::Case4;
using maslovkit::CriticalTypeVector;
using maslovkit::NonDegenerate;
using maslovkit::OrbitConfig;
using maslovkit::Rational;
using maslovkit::Verdict;
using maslovkit::VerdictKind;

namespace {

OrbitConfig make_config(maslovkit::NormalFormCase nf, long long i1) {
    OrbitConfig config;
    config.normal_form = std::move(nf);
    config.i1 = i1;
    return config;
}

}  // namespace

TEST_CASE("verdict_kind_to_string") {
    CHECK(maslovkit::verdict_kind_to_string(VerdictKind::ResonanceContradiction) ==
          "resonance_contradiction");
    CHECK(maslovkit::verdict_kind_to_string(VerdictKind::MorseSeriesContradiction) ==
          "morse_series_contradiction");
    CHECK(maslovkit::verdict_kind_to_string(VerdictKind::SymplecticallyDegenerateMaximum) ==
          "sdm");
    CHECK(maslovkit::verdict_kind_to_string(VerdictKind::NonDegenerateExternal) ==
          "nondegenerate_external");
    CHECK(maslovkit::verdict_kind_to_string(VerdictKind::Feasible) == "feasible");
}

TEST_CASE("negative shear pair at the index floor dies by Morse positivity") {
    // i1 = 0: the only resonance-consistent data is k(y) = (1) with k(y^2) = 0,
    // and its series has u_{-1} = -1
    for (int b : {-1, 0, 1}) {
        const auto verdict = maslovkit::analyze_single_orbit(make_config(Case1{b}, 0), 400);
        CHECK(verdict.kind == VerdictKind::MorseSeriesContradiction);
        REQUIRE(verdict.first_violation.has_value());
        CHECK(verdict.first_violation->first == -1);
        CHECK(verdict.first_violation->second == Rational(-1));
        REQUIRE(verdict.resonance_survivors.size() == 1);
        const auto& assignment = verdict.resonance_survivors.front();
        CHECK(assignment.at(1) == CriticalTypeVector{{1}});
        CHECK(assignment.at(2).is_zero());
        CHECK(verdict.morse_survivors.empty());
        CHECK(verdict.mean_index == Rational(1));
        CHECK(verdict.minimal_period == 2);
    }
}

TEST_CASE("negative shear pair above the floor dies by resonance alone") {
    // i1 = 2: chi-hat can only reach i-hat/2 = 3/2 through a non-integral or
    // out-of-range slot value, so no admissible data satisfies the identity
    for (int b : {-1, 0, 1}) {
        const auto verdict = maslovkit::analyze_single_orbit(make_config(Case1{b}, 2), 400);
        CHECK(verdict.kind == VerdictKind::ResonanceContradiction);
        CHECK(verdict.resonance_survivors.empty());

        // the two-branch solve pins the would-be slot value to +-i1
        REQUIRE(verdict.interior_solves.size() == 2);
        bool saw_odd_branch = false;
        for (const auto& record : verdict.interior_solves) {
            CHECK(record.residue_class == 2);
            CHECK(record.slot == 1);
            if (record.sign == -1) {
                saw_odd_branch = true;
                CHECK(record.value == Rational(2));
                if (b == 1) {
                    // matches the actual parity but overflows the top-slot bound
                    CHECK(record.matches_case_parity);
                    CHECK(!record.admissible);
                } else {
                    CHECK(!record.matches_case_parity);
                }
            } else {
                CHECK(record.value == Rational(-2));
            }
        }
        CHECK(saw_odd_branch);
    }
}

TEST_CASE("elliptic pair at the index floor dies by Morse positivity") {
    const Rational angles[] = {Rational(1, 2), Rational(3, 2), Rational(2, 3), Rational(5, 12)};
    for (const Rational& theta : angles) {
        const auto verdict =
            maslovkit::analyze_single_orbit(make_config(Case2{theta}, 0), 400);
        CHECK(verdict.kind == VerdictKind::MorseSeriesContradiction);
        REQUIRE(verdict.first_violation.has_value());
        CHECK(verdict.first_violation->first == -1);
        CHECK(verdict.mean_index == theta);
    }
}

TEST_CASE("elliptic pair above the floor dies by resonance") {
    const auto verdict =
        maslovkit::analyze_single_orbit(make_config(Case2{Rational(1, 2)}, 2), 400);
    CHECK(verdict.kind == VerdictKind::ResonanceContradiction);
    CHECK(verdict.resonance_survivors.empty());
}

TEST_CASE("unit shear pair with b=0 at the floor is a symplectically degenerate maximum") {
    const auto verdict = maslovkit::analyze_single_orbit(make_config(Case3{0}, 0), 400);
    CHECK(verdict.kind == VerdictKind::SymplecticallyDegenerateMaximum);
    CHECK(verdict.mean_index == Rational(2));
    CHECK(verdict.minimal_period == 1);
    // two assignments keep the identity, only the maximum type survives Morse
    REQUIRE(verdict.resonance_survivors.size() == 2);
    REQUIRE(verdict.morse_survivors.size() == 1);
    CHECK(verdict.morse_survivors.front().at(1) == CriticalTypeVector{{0, 0, 1}});
}

TEST_CASE("unit shear pair with b=1 at the floor dies by Morse positivity") {
    // nu = 2 here, so the maximum-type candidate (0,1) puts mass at degree -1
    // and the positivity relation fails; no degenerate maximum arises
    const auto verdict = maslovkit::analyze_single_orbit(make_config(Case3{1}, 0), 400);
    CHECK(verdict.kind == VerdictKind::MorseSeriesContradiction);
    REQUIRE(verdict.first_violation.has_value());
    CHECK(verdict.first_violation->first == -1);
}

TEST_CASE("negative unit shear at i1=1 is a symplectically degenerate maximum") {
    const auto verdict = maslovkit::analyze_single_orbit(make_config(Case4{}, 1), 400);
    CHECK(verdict.kind == VerdictKind::SymplecticallyDegenerateMaximum);
    CHECK(verdict.mean_index == Rational(2));
    REQUIRE(verdict.morse_survivors.size() == 1);
    CHECK(verdict.morse_survivors.front().at(1) == CriticalTypeVector{{0, 1}});

    // the solved slot value is exactly 1 on the matching branch
    bool found = false;
    for (const auto& record : verdict.interior_solves) {
        if (record.sign == -1) {
            found = true;
            CHECK(record.residue_class == 1);
            CHECK(record.slot == 1);
            CHECK(record.value == Rational(1));
            CHECK(record.matches_case_parity);
            CHECK(record.admissible);
        }
    }
    CHECK(found);
}

TEST_CASE("negative unit shear above the floor dies by resonance") {
    const auto verdict = maslovkit::analyze_single_orbit(make_config(Case4{}, 3), 400);
    CHECK(verdict.kind == VerdictKind::ResonanceContradiction);
    CHECK(verdict.resonance_survivors.empty());
}

TEST_CASE("non-positive mean index is an immediate resonance contradiction") {
    const auto floor_zero = maslovkit::analyze_single_orbit(make_config(Case4{}, -1), 400);
    CHECK(floor_zero.kind == VerdictKind::ResonanceContradiction);
    CHECK(floor_zero.mean_index == Rational(0));

    const auto negative = maslovkit::analyze_single_orbit(make_config(Case1{0}, -4), 400);
    CHECK(negative.kind == VerdictKind::ResonanceContradiction);
    CHECK(negative.mean_index == Rational(-3));

    const auto rotation = maslovkit::analyze_single_orbit(
        make_config(Case2{Rational(1, 3)}, -2), 400);
    CHECK(rotation.kind == VerdictKind::ResonanceContradiction);
    CHECK(rotation.mean_index == Rational(-5, 3));
}

TEST_CASE("non-degenerate worlds are settled externally") {
    const auto verdict =
        maslovkit::analyze_single_orbit(make_config(NonDegenerate{true, false}, 2), 400);
    CHECK(verdict.kind == VerdictKind::NonDegenerateExternal);
    CHECK(!verdict.mean_index.has_value());
}

TEST_CASE("caller-supplied k-vectors do not steer the analyzer") {
    OrbitConfig pinned = make_config(Case3{0}, 0);
    pinned.k_vectors[1] = CriticalTypeVector{{0, 7, 0}};  // junk
    const auto with_junk = maslovkit::analyze_single_orbit(pinned, 400);
    const auto clean = maslovkit::analyze_single_orbit(make_config(Case3{0}, 0), 400);
    CHECK(with_junk.kind == clean.kind);
    CHECK(with_junk.morse_survivors == clean.morse_survivors);
    CHECK(with_junk.trace == clean.trace);
}

TEST_CASE("analysis is deterministic") {
    const auto first = maslovkit::analyze_single_orbit(make_config(Case2{Rational(5, 12)}, 0), 400);
    const auto second = maslovkit::analyze_single_orbit(make_config(Case2{Rational(5, 12)}, 0), 400);
    CHECK(first.kind == second.kind);
    CHECK(first.trace == second.trace);
    CHECK(first.resonance_survivors == second.resonance_survivors);
}

TEST_CASE("verdicts are stable under doubling the truncation") {
    const std::pair<maslovkit::NormalFormCase, long long> probes[] = {
        {Case1{1}, 0},  {Case1{0}, 2},  {Case2{Rational(1, 2)}, 0},
        {Case2{Rational(7, 5)}, 0},     {Case3{0}, 0},  {Case3{1}, 0},
        {Case4{}, 1},   {Case4{}, 5},
    };
    for (const auto& [nf, i1] : probes) {
        const auto coarse = maslovkit::analyze_single_orbit(make_config(nf, i1), 200);
        const auto fine = maslovkit::analyze_single_orbit(make_config(nf, i1), 400);
        CHECK(coarse.kind == fine.kind);
        CHECK(coarse.first_violation == fine.first_violation);
    }
}

TEST_CASE("an uncertifiable truncation raises truncation_error instead of guessing") {
    // with the truncation far below the index floor nothing is checkable and
    // the surviving assignment cannot be certified
    CHECK_THROWS_AS(
        maslovkit::analyze_single_orbit(make_config(Case2{Rational(1, 12)}, 0), -10),
        maslovkit::truncation_error);
    // the sweep records the same world as inconclusive instead of crashing
    const auto report = maslovkit::sweep_single_orbit_cases(0, 0, 12, -10);
    CHECK(!report.inconclusive.empty());
    CHECK(!report.certified());
    CHECK(report.feasible_count() == 0);
}

TEST_CASE("small sweep: every world dies and the degenerate maxima are pinned") {
    const auto report = maslovkit::sweep_single_orbit_cases(-4, 8, 5, 400);
    CHECK(report.certified());
    CHECK(report.feasible_count() == 0);
    CHECK(report.inconclusive.empty());

    int sdm_count = 0;
    for (const auto& entry : report.entries) {
        if (entry.verdict.kind == VerdictKind::SymplecticallyDegenerateMaximum) {
            ++sdm_count;
            CHECK(entry.verdict.mean_index == Rational(2));
            const bool unit_shear = std::holds_alternative<Case3>(entry.config.normal_form) &&
                                    std::get<Case3>(entry.config.normal_form).b == 0 &&
                                    entry.config.i1 == 0;
            const bool negative_unit = std::holds_alternative<Case4>(entry.config.normal_form) &&
                                       entry.config.i1 == 1;
            CHECK((unit_shear || negative_unit));
        }
    }
    CHECK(sdm_count == 2);

    // grid arithmetic: the 18 rotations with q <= 5 (2 phi(q) angles each)
    // and 5 even-parity shear forms run over the 7 even values of [-4, 8],
    // the odd shear form over its 6 odd values
    CHECK(report.entries.size() == (3 + 18 + 2) * 7 + 1 * 6);
}

TEST_CASE("reduced_rotations enumerates lowest-term angles ordered by (q, p)") {
    const auto rotations = maslovkit::reduced_rotations(3);
    const std::vector<Rational> expected = {
        Rational(1, 2), Rational(3, 2), Rational(1, 3), Rational(2, 3),
        Rational(4, 3), Rational(5, 3),
    };
    CHECK(rotations == expected);
    CHECK(maslovkit::reduced_rotations(12).size() == 90);
    CHECK(maslovkit::reduced_rotations(1).empty());
}

TEST_CASE("empty i1 ranges produce an empty certified report") {
    const auto report = maslovkit::sweep_single_orbit_cases(5, 4, 12, 400);
    CHECK(report.entries.empty());
    CHECK(report.certified());
}
