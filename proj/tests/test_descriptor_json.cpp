#include <cmath>

#include <doctest.h>

#include "ce/descriptor_json.hpp"

using namespace ce;

namespace {

ExprPtr nested_example() {
    BallUnion two(2, 0.4, {{0.0, 0.0}, {1.3, 0.2}});
    return Expr::sum({{1.0, Expr::eigen(2, 0)},
                      {-0.25, Expr::dilated(1.5, Expr::eigen(2, 3))},
                      {0.125, Expr::fourier_node(Expr::autocorr(two))},
                      {2.0, Expr::ft_squared(two)}});
}

} // namespace

TEST_CASE("descriptor round trip is the identity") {
    ExprPtr f = nested_example();
    std::string text = serialize_descriptor(f);
    ExprPtr g = parse_descriptor(text);
    CHECK(serialize_descriptor(g) == text);
    // and the parsed function evaluates identically
    for (double x : {0.0, 0.3, 1.1}) {
        std::vector<double> p{x, 0.5 * x};
        CHECK(evaluate(g, p) == doctest::Approx(evaluate(f, p)).epsilon(1e-14));
    }
}

TEST_CASE("ball union round trip") {
    BallUnion s(3, 0.45, {{0.0, 0.0, 0.0}, {1.0, 0.5, -0.25}});
    std::string text = serialize_ball_union(s);
    BallUnion t = parse_ball_union(text);
    CHECK(t.dim() == s.dim());
    CHECK(t.radius() == s.radius());
    CHECK(t.centers() == s.centers());
    CHECK(serialize_ball_union(t) == text);
}

TEST_CASE("malformed input is rejected as invalid") {
    CHECK_THROWS_AS(parse_descriptor("not json at all"), InvalidInputError);
    CHECK_THROWS_AS(parse_descriptor("{}"), InvalidInputError);
    CHECK_THROWS_AS(parse_descriptor(R"({"dim":1,"node":"mystery"})"), InvalidInputError);
    CHECK_THROWS_AS(parse_ball_union("[1,2,3]"), InvalidInputError);
    // structurally valid JSON with an impossible geometry still fails cleanly
    CHECK_THROWS_AS(
        parse_ball_union(R"({"dim":1,"radius":0.5,"centers":[[0.0],[0.2]]})"),
        InvalidInputError);
}

TEST_CASE("serialization is deterministic") {
    CHECK(serialize_descriptor(nested_example()) == serialize_descriptor(nested_example()));
}
