#include <cmath>
#include <optional>
#include <vector>

#include <doctest.h>

#include "ce/indicator_geometry.hpp"
#include "ce/zero_analysis.hpp"

using namespace ce;

namespace {

// Report whose zero set is exactly the given list of lengths.
ZeroReport synthetic_zeros(std::vector<double> lengths, double r_max) {
    ZeroReport rep;
    rep.dim = 1;
    rep.side = ProfileSide::Function;
    rep.r_max = r_max;
    rep.tol = 1e-12;
    rep.scan_step = 1e-3;
    for (double t : lengths) rep.roots.push_back({t, ZeroKind::Touching});
    return rep;
}

GapOracle zero_free_oracle() {
    return [](double t_min, double width) -> std::optional<GapInterval> {
        return GapInterval{t_min, t_min + width + 1.0};
    };
}

// Every pairwise difference ball of S must stay clear of every zero length.
bool pairwise_certified(const BallUnion& s, const std::vector<double>& zeros) {
    double eps = s.radius();
    const auto& cs = s.centers();
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            double d2 = 0.0;
            for (std::size_t a = 0; a < cs[i].size(); ++a) {
                double dd = cs[i][a] - cs[j][a];
                d2 += dd * dd;
            }
            double d = std::sqrt(d2);
            for (double z : zeros)
                if (std::abs(d - z) <= 2.0 * eps) return false;
        }
    return true;
}

} // namespace

TEST_CASE("multi-ball chain on lattice-spaced zeros, n = 2") {
    // zeros every 10 units starting at 2.5: the narrow first gap rules out the
    // single-ball shortcut, so the chain must thread the later gaps
    std::vector<double> zeros{2.5, 12.5, 22.5, 32.5};
    GapOracle oracle = make_gap_oracle(synthetic_zeros(zeros, 40.0), 1e-3);
    BallUnion s = witness_chain(2, oracle, 1.0, 9.0);
    CHECK(s.count() >= 2);
    CHECK(measure(s) > 9.0);
    CHECK(pairwise_certified(s, zeros));
    const auto& cs = s.centers();
    for (std::size_t i = 0; i + 1 < cs.size(); ++i)
        CHECK(cs[i + 1][0] - cs[i][0] >= 2.0 * s.radius());
}

TEST_CASE("chain threads a dense zero lattice in n = 1") {
    std::vector<double> zeros{1.0, 11.0, 21.0, 31.0, 41.0};
    GapOracle oracle = make_gap_oracle(synthetic_zeros(zeros, 50.0), 1e-3);
    BallUnion s = witness_chain(1, oracle, 0.45, 2.0);
    CHECK(s.count() >= 3);
    CHECK(measure(s) > 2.0);
    CHECK(pairwise_certified(s, zeros));
}

TEST_CASE("wide first gap admits the single-ball shortcut") {
    std::vector<double> zeros{10.0, 20.0, 30.0};
    GapOracle oracle = make_gap_oracle(synthetic_zeros(zeros, 40.0), 1e-3);
    BallUnion s = witness_chain(2, oracle, 1.0, 1.5);
    CHECK(s.count() == 1);
    CHECK(s.centers()[0][0] == 0.0);
    CHECK(measure(s) > 1.5);
}

TEST_CASE("no zeros at all: a single ball at the origin suffices") {
    BallUnion s = witness_chain(1, zero_free_oracle(), 0.1, 1.1);
    CHECK(s.count() == 1);
    CHECK(s.centers()[0][0] == 0.0);
    CHECK(measure(s) > 1.1);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(witness_chain(0, zero_free_oracle(), 0.1, 2.0), InvalidInputError);
    CHECK_THROWS_AS(witness_chain(1, zero_free_oracle(), -0.1, 2.0), InvalidInputError);
    CHECK_THROWS_AS(witness_chain(1, zero_free_oracle(), 0.1, 0.9), InvalidInputError);
}

TEST_CASE("eps above half the first zero-free length is rejected") {
    GapOracle oracle = make_gap_oracle(synthetic_zeros({10.0, 20.0, 30.0}, 40.0), 1e-3);
    CHECK_THROWS_AS(witness_chain(1, oracle, 6.0, 1e6), PreconditionError);
}

TEST_CASE("dyadic gaps starve the chain") {
    ZeroReport fix = dyadic_gap_fixture(0.25, 12, 600.0);
    GapOracle oracle = make_gap_oracle(fix, 0.0);
    CHECK_THROWS_AS(witness_chain(1, oracle, 0.1, 1.1), RefusedError);
}
