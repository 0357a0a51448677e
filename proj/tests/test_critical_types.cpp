#include <doctest.h>

#include <maslovkit/critical_types.hpp>
#include <maslovkit/iteration.hpp>

#include <algorithm>
#include <vector>

using maslovkit::Case1;
using maslovkit::Case2;
using maslovkit::Case3;
using maslovkit::Case4;
using maslovkit::CriticalTypeVector;
using maslovkit::NonDegenerate;
using maslovkit::OrbitConfig;
using maslovkit::Rational;

namespace {

// Independent admissibility filter: spell the clauses out with bare loops
// and compare against the library's enumerator.
bool brute_force_admissible(const std::vector<long long>& k) {
    const std::size_t nu = k.size();
    for (long long entry : k)
        if (entry < 0) return false;
    if (k.front() > 1 || k.back() > 1) return false;
    if (k.front() == 1) {
        for (std::size_t l = 1; l < nu; ++l)
            if (k[l] != 0) return false;
    }
    if (k.back() == 1) {
        for (std::size_t l = 0; l + 1 < nu; ++l)
            if (k[l] != 0) return false;
    }
    for (std::size_t l = 1; l + 1 < nu; ++l) {
        if (k[l] != 0 && (k.front() != 0 || k.back() != 0)) return false;
    }
    if (nu <= 3) {
        int nonzero = 0;
        for (long long entry : k)
            if (entry != 0) ++nonzero;
        if (nonzero > 1) return false;
    }
    return true;
}

std::vector<CriticalTypeVector> brute_force_enumeration(int nu, long long interior_max) {
    std::vector<CriticalTypeVector> out;
    std::vector<long long> k(static_cast<std::size_t>(nu), 0);
    const long long boundary_max = 9;  // deliberately past the admissible range
    while (true) {
        if (brute_force_admissible(k)) out.push_back(CriticalTypeVector{k});
        int slot = nu - 1;
        for (; slot >= 0; --slot) {
            const long long cap = (slot == 0 || slot == nu - 1) ? boundary_max : interior_max;
            if (k[static_cast<std::size_t>(slot)] < cap) {
                ++k[static_cast<std::size_t>(slot)];
                break;
            }
            k[static_cast<std::size_t>(slot)] = 0;
        }
        if (slot < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("single-clause predicates separate the failure modes") {
    using namespace maslovkit;
    CHECK(!entries_nonnegative(CriticalTypeVector{{0, -1, 0}}));
    CHECK(entries_nonnegative(CriticalTypeVector{{0, 5, 0}}));

    CHECK(!boundary_entries_bounded(CriticalTypeVector{{2}}));
    CHECK(!boundary_entries_bounded(CriticalTypeVector{{0, 0, 2}}));
    CHECK(boundary_entries_bounded(CriticalTypeVector{{1, 7, 0}}));

    CHECK(!minimum_excludes_others(CriticalTypeVector{{1, 1, 0}}));
    CHECK(minimum_excludes_others(CriticalTypeVector{{1, 0, 0}}));
    CHECK(minimum_excludes_others(CriticalTypeVector{{0, 3, 1}}));

    CHECK(!maximum_excludes_others(CriticalTypeVector{{0, 1, 1}}));
    CHECK(maximum_excludes_others(CriticalTypeVector{{0, 0, 1}}));

    CHECK(!interior_excludes_boundary(CriticalTypeVector{{1, 2, 0}}));
    CHECK(!interior_excludes_boundary(CriticalTypeVector{{0, 2, 1}}));
    CHECK(interior_excludes_boundary(CriticalTypeVector{{0, 2, 0}}));

    CHECK(!at_most_one_nonzero(CriticalTypeVector{{1, 0, 1}}));
    CHECK(at_most_one_nonzero(CriticalTypeVector{{0, 4, 0}}));
}

TEST_CASE("admissible worked examples") {
    using maslovkit::admissible;
    CHECK(admissible(CriticalTypeVector{{0}}));
    CHECK(admissible(CriticalTypeVector{{1}}));
    CHECK(!admissible(CriticalTypeVector{{2}}));
    CHECK(admissible(CriticalTypeVector{{0, 0}}));
    CHECK(admissible(CriticalTypeVector{{1, 0}}));
    CHECK(admissible(CriticalTypeVector{{0, 1}}));
    CHECK(!admissible(CriticalTypeVector{{1, 1}}));
    CHECK(admissible(CriticalTypeVector{{0, 5, 0}}));
    CHECK(admissible(CriticalTypeVector{{0, 0, 1}}));
    CHECK(!admissible(CriticalTypeVector{{1, 0, 1}}));
    CHECK(!admissible(CriticalTypeVector{{1, 1, 0}}));
    CHECK(!admissible(CriticalTypeVector{{0, 1, 1}}));
    CHECK(!admissible(CriticalTypeVector{{0, 0, 2}}));
}

TEST_CASE("admissible_vectors enumerates exactly the admissible set") {
    const auto nu1 = maslovkit::admissible_vectors(1, 0);
    CHECK(nu1 == std::vector<CriticalTypeVector>{CriticalTypeVector{{0}}, CriticalTypeVector{{1}}});

    const auto nu2 = maslovkit::admissible_vectors(2, 0);
    CHECK(nu2 == std::vector<CriticalTypeVector>{CriticalTypeVector{{0, 0}},
                                                 CriticalTypeVector{{0, 1}},
                                                 CriticalTypeVector{{1, 0}}});

    const auto nu3 = maslovkit::admissible_vectors(3, 2);
    CHECK(nu3 == std::vector<CriticalTypeVector>{
                     CriticalTypeVector{{0, 0, 0}}, CriticalTypeVector{{0, 0, 1}},
                     CriticalTypeVector{{0, 1, 0}}, CriticalTypeVector{{0, 2, 0}},
                     CriticalTypeVector{{1, 0, 0}}});

    CHECK_THROWS_AS(maslovkit::admissible_vectors(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(maslovkit::admissible_vectors(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(maslovkit::admissible_vectors(3, -1), std::invalid_argument);
}

TEST_CASE("admissible_vectors agrees with the brute-force clause filter") {
    for (int nu = 1; nu <= 3; ++nu) {
        for (long long interior_max = 0; interior_max <= 5; ++interior_max) {
            CHECK(maslovkit::admissible_vectors(nu, interior_max) ==
                  brute_force_enumeration(nu, interior_max));
        }
    }
}

TEST_CASE("every enumerated vector passes admissible and has one support slot") {
    for (int nu = 1; nu <= 3; ++nu) {
        for (const auto& v : maslovkit::admissible_vectors(nu, 4)) {
            CHECK(maslovkit::admissible(v));
            int nonzero = 0;
            for (long long entry : v.k)
                if (entry != 0) ++nonzero;
            CHECK(nonzero <= 1);
        }
    }
}

TEST_CASE("average_euler_char worked examples") {
    // single non-degenerate-style class: K = 1, chi = (-1)^{i(y)} k_0 pattern
    OrbitConfig maximum_orbit;
    maximum_orbit.normal_form = Case4{};
    maximum_orbit.i1 = 1;
    maximum_orbit.k_vectors[1] = CriticalTypeVector{{0, 1}};
    // i(y) - 2 = -1, slot 1: (-1)^{-1+1} * 1 = 1
    CHECK(maslovkit::average_euler_char(maximum_orbit) == Rational(1));

    OrbitConfig degenerate_min;
    degenerate_min.normal_form = Case3{0};
    degenerate_min.i1 = 0;
    degenerate_min.k_vectors[1] = CriticalTypeVector{{1, 0, 0}};
    // morse index -2, slot 0: (-1)^{-2} = 1
    CHECK(maslovkit::average_euler_char(degenerate_min) == Rational(1));

    OrbitConfig two_classes;
    two_classes.normal_form = Case1{1};
    two_classes.i1 = 0;
    two_classes.k_vectors[1] = CriticalTypeVector{{1}};       // i(y) - 2 = -2
    two_classes.k_vectors[2] = CriticalTypeVector{{0, 0}};    // even class contributes 0
    CHECK(maslovkit::average_euler_char(two_classes) == Rational(1, 2));

    const auto data = maslovkit::average_euler_char_data(two_classes);
    REQUIRE(data.per_iterate_terms.size() == 2);
    CHECK(data.per_iterate_terms[0] == std::pair<long long, Rational>{1, Rational(1)});
    CHECK(data.per_iterate_terms[1] == std::pair<long long, Rational>{2, Rational(0)});

    // sign flips with the morse index parity
    OrbitConfig odd_degree;
    odd_degree.normal_form = Case4{};
    odd_degree.i1 = 1;
    odd_degree.k_vectors[1] = CriticalTypeVector{{0, 3}};  // degree -1+1 = 0 even
    CHECK(maslovkit::average_euler_char(odd_degree) == Rational(3));
    odd_degree.k_vectors[1] = CriticalTypeVector{{2, 0}};  // degree -1 odd
    CHECK(maslovkit::average_euler_char(odd_degree) == Rational(-2));
}

TEST_CASE("average_euler_char requires every residue class") {
    OrbitConfig partial;
    partial.normal_form = Case1{1};
    partial.i1 = 0;
    partial.k_vectors[1] = CriticalTypeVector{{1}};
    CHECK_THROWS_WITH_AS(maslovkit::average_euler_char(partial),
                         "missing k-vector for residue class 2", std::invalid_argument);
}

TEST_CASE("average_euler_char is the mean of the per-iterate terms") {
    OrbitConfig config;
    config.normal_form = Case2{Rational(1, 2)};
    config.i1 = 0;
    config.k_vectors[1] = CriticalTypeVector{{1}};
    config.k_vectors[2] = CriticalTypeVector{{1}};
    config.k_vectors[3] = CriticalTypeVector{{0}};
    config.k_vectors[4] = CriticalTypeVector{{0, 2, 0}};
    const auto data = maslovkit::average_euler_char_data(config);
    REQUIRE(data.per_iterate_terms.size() == 4);
    Rational total = 0;
    for (const auto& [m, term] : data.per_iterate_terms) total += term;
    CHECK(data.chi_hat == total / 4);
    // concrete values: morse degree is -2 for every m <= 4; class 4's slot 1
    // sits at degree -1 (odd) and contributes -2
    CHECK(data.per_iterate_terms[0].second == Rational(1));
    CHECK(data.per_iterate_terms[1].second == Rational(1));
    CHECK(data.per_iterate_terms[2].second == Rational(0));
    CHECK(data.per_iterate_terms[3].second == Rational(-2));
    CHECK(data.chi_hat == Rational(0));
}

TEST_CASE("non-degenerate orbits have a forced two-valued Euler characteristic") {
    OrbitConfig nd;
    nd.normal_form = NonDegenerate{true, false};
    nd.i1 = 2;
    nd.mean_index_hint = Rational(7, 3);
    CHECK(maslovkit::average_euler_char(nd) == Rational(1));

    nd.i1 = 3;
    CHECK(maslovkit::average_euler_char(nd) == Rational(-1));

    nd.normal_form = NonDegenerate{true, true};  // odd index jump: K = 2, y^2 contributes 0
    nd.i1 = 2;
    CHECK(maslovkit::average_euler_char(nd) == Rational(1, 2));
    nd.i1 = 1;
    CHECK(maslovkit::average_euler_char(nd) == Rational(-1, 2));

    const auto data = maslovkit::average_euler_char_data(nd);
    REQUIRE(data.per_iterate_terms.size() == 2);
    CHECK(data.per_iterate_terms[0].second == Rational(-1));
    CHECK(data.per_iterate_terms[1].second == Rational(0));
}

TEST_CASE("k_vector_to_string") {
    CHECK(maslovkit::k_vector_to_string(CriticalTypeVector{{0, 2, 0}}) == "(0,2,0)");
    CHECK(maslovkit::k_vector_to_string(CriticalTypeVector{{1}}) == "(1)");
}
