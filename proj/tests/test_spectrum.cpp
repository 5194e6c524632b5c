#include <cstdint>
#include <vector>

#include "doctest.h"
#include "onelap/graph.hpp"
#include "onelap/report_io.hpp"
#include "onelap/spectrum.hpp"
#include "support/oracles.hpp"

using onelap::EnumConfig;
using onelap::ErrorCode;
using onelap::Graph;
using onelap::Rat;
using onelap::TernaryPattern;
using onelap::VertexFunction;
using testsupport::make_pattern;
using testsupport::spectrum_values;

namespace {

template <typename F>
bool throws_with(ErrorCode code, F&& fn) {
    try {
        fn();
    } catch (const onelap::Error& e) {
        return e.code() == code;
    }
    return false;
}

Graph hub_graph() {
    return onelap::build_graph(5, {{0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

bool entry_has_pattern(const onelap::EigenvalueEntry& entry, const TernaryPattern& p) {
    for (const auto& q : entry.patterns)
        if (q.sign == p.sign) return true;
    return false;
}

std::vector<TernaryPattern> all_canonical_patterns(int n) {
    std::vector<TernaryPattern> out;
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::int64_t index = 1; index < total; ++index) {
        TernaryPattern p;
        p.sign.resize(n);
        std::int64_t rest = index;
        for (int i = 0; i < n; ++i) {
            int digit = static_cast<int>(rest % 3);
            rest /= 3;
            p.sign[i] = static_cast<std::int8_t>(digit == 2 ? -1 : digit);
        }
        if (p.is_canonical()) out.push_back(std::move(p));
    }
    return out;
}

} // namespace

TEST_CASE("fixture spectra") {
    auto k2 = onelap::enumerate_spectrum(onelap::path_graph(2));
    CHECK(spectrum_values(k2) == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(k2.eigenvalues[0].pattern_count == 1);
    CHECK(k2.eigenvalues[1].pattern_count == 3); // +-, +0, 0+

    auto c3 = onelap::enumerate_spectrum(onelap::cycle_graph(3));
    CHECK(spectrum_values(c3) == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(c3.eigenvalues[1].pattern_count == 6); // three singletons, three +/- pairs

    auto p4 = onelap::enumerate_spectrum(onelap::path_graph(4));
    CHECK(spectrum_values(p4) == std::vector<Rat>{Rat(0), Rat(1, 3), Rat(1)});
    CHECK(p4.n == 4);
    CHECK(p4.m == 3);
    CHECK(p4.components == 1);
    const auto& mid = p4.eigenvalues[1];
    CHECK(mid.pattern_count == 3);
    CHECK(entry_has_pattern(mid, make_pattern("++00")));
    CHECK(entry_has_pattern(mid, make_pattern("00++")));
    CHECK(entry_has_pattern(mid, make_pattern("++--")));
    CHECK(mid.patterns.size() == 3);
    CHECK(mid.representative.mu == Rat(1, 3));

    auto c4 = onelap::enumerate_spectrum(onelap::cycle_graph(4));
    CHECK(spectrum_values(c4) == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)});
    CHECK(entry_has_pattern(c4.eigenvalues[1], make_pattern("++--")));
    CHECK(entry_has_pattern(c4.eigenvalues[2], make_pattern("+-+-")));
    CHECK(entry_has_pattern(c4.eigenvalues[2], make_pattern("+0-0")));

    auto hub = onelap::enumerate_spectrum(hub_graph());
    CHECK(spectrum_values(hub) == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)});
    CHECK(entry_has_pattern(hub.eigenvalues[1], make_pattern("+00+0")));
    CHECK(entry_has_pattern(hub.eigenvalues[2], make_pattern("++--0")));
    CHECK(entry_has_pattern(hub.eigenvalues[2], make_pattern("+-+-0")));
    CHECK(entry_has_pattern(hub.eigenvalues[2], make_pattern("+--00")));
}

TEST_CASE("every reported pattern certifies at its entry's eigenvalue") {
    for (const Graph& g : {onelap::cycle_graph(4), hub_graph(), onelap::path_graph(5)}) {
        auto report = onelap::enumerate_spectrum(g);
        for (const auto& entry : report.eigenvalues) {
            CHECK(entry.pattern_count == static_cast<std::int64_t>(entry.patterns.size()));
            CHECK(onelap::check_certificate(
                g, onelap::pattern_to_function(g, entry.patterns[0]), entry.representative));
            for (const auto& p : entry.patterns) {
                auto x = onelap::pattern_to_function(g, p);
                CHECK(onelap::tv_energy(g, x) == entry.mu);
                CHECK(onelap::verify_eigenpair(g, entry.mu, x).has_value());
            }
        }
    }
}

TEST_CASE("enumeration agrees with the elimination oracle pattern by pattern") {
    for (const Graph& g : {onelap::path_graph(4), onelap::cycle_graph(4), hub_graph()}) {
        auto report = onelap::enumerate_spectrum(g);
        for (const auto& p : all_canonical_patterns(g.n)) {
            auto x = onelap::pattern_to_function(g, p);
            Rat mu = onelap::tv_energy(g, x);
            bool certified = false;
            for (const auto& entry : report.eigenvalues)
                certified = certified || (entry.mu == mu && entry_has_pattern(entry, p));
            CHECK(certified == testsupport::oracle_verify(g, mu, x));
        }
    }
}

TEST_CASE("closed-form spectra match enumeration across the families") {
    for (int n = 2; n <= 7; ++n)
        CHECK(spectrum_values(onelap::enumerate_spectrum(onelap::path_graph(n))) ==
              onelap::path_spectrum_oracle(n));
    for (int n = 3; n <= 7; ++n)
        CHECK(spectrum_values(onelap::enumerate_spectrum(onelap::cycle_graph(n))) ==
              onelap::cycle_spectrum_oracle(n));
    for (int n = 3; n <= 7; ++n)
        CHECK(spectrum_values(onelap::enumerate_spectrum(onelap::complete_graph(n))) ==
              onelap::complete_spectrum_oracle(n));
    for (int n = 2; n <= 7; ++n)
        CHECK(spectrum_values(onelap::enumerate_spectrum(onelap::star_graph(n))) ==
              onelap::star_spectrum_oracle(n));
}

TEST_CASE("interior sign blocks on longer paths reach the even reciprocals") {
    // (0, 0, 1/4, 1/4, 0, 0) is an eigenvector of P6 at mu = 1/2: an interior
    // block of two vertices forces 2 mu = 1 and each two-vertex null chain
    // absorbs the unit boundary z. Endpoint-anchored blocks only reach odd
    // reciprocals, so 1/2 first appears at n = 6.
    Graph p6 = onelap::path_graph(6);
    auto x6 = onelap::pattern_to_function(p6, testsupport::make_pattern("00++00"));
    CHECK(x6 == VertexFunction{Rat(0), Rat(0), Rat(1, 4), Rat(1, 4), Rat(0), Rat(0)});
    auto cert = onelap::verify_eigenpair(p6, Rat(1, 2), x6);
    REQUIRE(cert.has_value());
    CHECK(onelap::check_certificate(p6, x6, *cert));
    CHECK(testsupport::oracle_verify(p6, Rat(1, 2), x6));
    CHECK(onelap::path_spectrum_oracle(6) ==
          std::vector<Rat>{Rat(0), Rat(1, 5), Rat(1, 3), Rat(1, 2), Rat(1)});

    // on P5 the left null chain is a single endpoint whose capacity mu d = 1/2
    // cannot carry the forced boundary z of -1, so 1/2 is not an eigenvalue
    Graph p5 = onelap::path_graph(5);
    auto x5 = onelap::pattern_to_function(p5, testsupport::make_pattern("0++00"));
    Rat mu5 = onelap::tv_energy(p5, x5);
    CHECK(mu5 == Rat(1, 2));
    CHECK_FALSE(onelap::verify_eigenpair(p5, mu5, x5).has_value());
    CHECK_FALSE(testsupport::oracle_verify(p5, mu5, x5));
    CHECK(onelap::path_spectrum_oracle(5) == std::vector<Rat>{Rat(0), Rat(1, 3), Rat(1)});
}

TEST_CASE("oracle guards") {
    CHECK(throws_with(ErrorCode::TooSmall, [] { onelap::path_spectrum_oracle(1); }));
    CHECK(throws_with(ErrorCode::TooSmall, [] { onelap::cycle_spectrum_oracle(2); }));
    CHECK(throws_with(ErrorCode::TooSmall, [] { onelap::complete_spectrum_oracle(2); }));
    CHECK(throws_with(ErrorCode::TooSmall, [] { onelap::star_spectrum_oracle(1); }));
}

TEST_CASE("zero eigenvalue pattern counts follow the component count") {
    CHECK(onelap::zero_eigenvalue_patterns(onelap::path_graph(4)) == 1);
    Graph pair = onelap::build_graph(4, {{0, 1}, {2, 3}});
    CHECK(onelap::zero_eigenvalue_patterns(pair) == 4);
    Graph triple = onelap::build_graph(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(onelap::zero_eigenvalue_patterns(triple) == 13);

    auto report = onelap::enumerate_spectrum(pair);
    CHECK(report.components == 2);
    CHECK(report.eigenvalues[0].mu == Rat(0));
    CHECK(report.eigenvalues[0].pattern_count == 4);
    CHECK(throws_with(ErrorCode::Disconnected, [&] { onelap::second_eigenvalue(report); }));
}

TEST_CASE("second eigenvalue picks the smallest nonzero entry") {
    CHECK(onelap::second_eigenvalue(onelap::enumerate_spectrum(onelap::path_graph(4))) == Rat(1, 3));
    CHECK(onelap::second_eigenvalue(onelap::enumerate_spectrum(onelap::path_graph(2))) == Rat(1));
    CHECK(onelap::second_eigenvalue(onelap::enumerate_spectrum(onelap::petersen_graph())) ==
          Rat(1, 3));
}

TEST_CASE("size guard") {
    EnumConfig tight;
    tight.max_n = 9;
    CHECK(throws_with(ErrorCode::TooLarge,
                      [&] { onelap::enumerate_spectrum(onelap::petersen_graph(), tight); }));
}

TEST_CASE("report does not depend on threads, chunking, or the median filter") {
    Graph fixtures[] = {onelap::path_graph(4), onelap::cycle_graph(5), hub_graph(),
                        onelap::build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}})};
    for (const Graph& g : fixtures) {
        EnumConfig base;
        std::string reference = onelap::spectrum_to_json(g, onelap::enumerate_spectrum(g, base));
        for (int threads : {2, 8}) {
            EnumConfig c = base;
            c.threads = threads;
            CHECK(onelap::spectrum_to_json(g, onelap::enumerate_spectrum(g, c)) == reference);
        }
        for (int chunk : {1, 7, 100000}) {
            EnumConfig c = base;
            c.chunk_size = chunk;
            CHECK(onelap::spectrum_to_json(g, onelap::enumerate_spectrum(g, c)) == reference);
        }
        EnumConfig unfiltered = base;
        unfiltered.median_filter = false;
        CHECK(onelap::spectrum_to_json(g, onelap::enumerate_spectrum(g, unfiltered)) == reference);
        EnumConfig both = base;
        both.threads = 3;
        both.median_filter = false;
        both.chunk_size = 11;
        CHECK(onelap::spectrum_to_json(g, onelap::enumerate_spectrum(g, both)) == reference);
    }
}

TEST_CASE("eigenvalues sit inside the unit interval with zero always present") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = testsupport::random_connected_graph(rng, n, 30);
        auto report = onelap::enumerate_spectrum(g);
        REQUIRE(!report.eigenvalues.empty());
        CHECK(report.eigenvalues.front().mu == Rat(0));
        CHECK(report.eigenvalues.back().mu <= Rat(1));
        for (std::size_t i = 1; i < report.eigenvalues.size(); ++i)
            CHECK(report.eigenvalues[i - 1].mu < report.eigenvalues[i].mu);
    }
}
