// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "susyq/field.hpp"
#include "test_support.hpp"

using namespace susyq;

namespace {

Parity parity_of(const char* text, Axis axis) {
    return parity_of_component(parse_expression(text), axis, SamplerConfig{}).parity;
}

}  // namespace

TEST_CASE("sampled parity verdicts", "[parity]") {
    CHECK(parity_of("x*y", Axis::X) == Parity::Odd);
    CHECK(parity_of("ln(x^2+y^2)", Axis::X) == Parity::Even);
    CHECK(parity_of("z^3 - z", Axis::Y) == Parity::Even);  // independent of y
    CHECK(parity_of("z^3 - z", Axis::Z) == Parity::Odd);
    CHECK(parity_of("0", Axis::X) == Parity::Zero);
    CHECK(parity_of("x - x", Axis::Y) == Parity::Zero);
    CHECK(parity_of("x + 1", Axis::X) == Parity::None);
    CHECK(parity_of("exp(x)", Axis::X) == Parity::None);
    CHECK(parity_of("sin(x)*cos(y)", Axis::X) == Parity::Odd);
    CHECK(parity_of("abs(x)", Axis::X) == Parity::Even);
}

TEST_CASE("parity sampling is deterministic in the seed", "[parity]") {
    Expr e = parse_expression("x^2*y + sin(z)");
    SamplerConfig sampler;
    auto a = parity_of_component(e, Axis::Y, sampler);
    auto b = parity_of_component(e, Axis::Y, sampler);
    CHECK(a.parity == b.parity);
    CHECK(a.max_deviation == b.max_deviation);
    sampler.seed = 1234;
    auto c = parity_of_component(e, Axis::Y, sampler);
    CHECK(c.parity == a.parity);  // verdict is seed independent, deviations need not be
}

TEST_CASE("sampler validates its configuration", "[parity]") {
    Expr e = parse_expression("x");
    SamplerConfig sampler;
    sampler.count = 8;
    CHECK_THROWS_AS(parity_of_component(e, Axis::X, sampler), Error);
    CHECK_THROWS_AS(parity_of_component(e, Axis::X, SamplerConfig{}, -1.0), Error);
}

TEST_CASE("persistent domain errors surface after the retry budget", "[parity]") {
    Expr e = parse_expression("ln(x - x)");  // ln(0) everywhere
    CHECK_THROWS_AS(parity_of_component(e, Axis::X, SamplerConfig{}), DomainError);
}

TEST_CASE("domain-error loci are resampled", "[parity]") {
    // ln(x^2) fails only on the measure-zero plane x = 0; sampling never gets
    // stuck there.
    Expr e = parse_expression("ln(x^2)");
    CHECK(parity_of_component(e, Axis::X, SamplerConfig{}).parity == Parity::Even);
}

TEST_CASE("sampled parity agrees with the coefficient oracle on polynomials", "[parity]") {
    std::mt19937_64 rng(0xC0FFEE);
    for (int trial = 0; trial < 60; ++trial) {
        auto poly = testing::random_polynomial(rng, 6, 5);
        Expr e = testing::polynomial_to_expr(poly);
        INFO("polynomial: " << to_string(e));
        for (int axis = 0; axis < 3; ++axis) {
            Parity expected = testing::exact_parity(poly, axis);
            Parity sampled =
                parity_of_component(e, axis_from_index(axis), SamplerConfig{}).parity;
            INFO("axis " << axis);
            CHECK(sampled == expected);
        }
    }
}

TEST_CASE("zero verdict subsumes both symmetric verdicts", "[parity]") {
    auto v = parity_of_component(parse_expression("0*x"), Axis::X, SamplerConfig{});
    CHECK(v.parity == Parity::Zero);
    CHECK(v.max_deviation == 0.0);
}

TEST_CASE("supercharge prediction from parity signatures", "[parity]") {
    auto free = VectorPotentialSpec::make("free", {"0", "0", "0"});
    auto p_free = predict_supercharges(free);
    CHECK(p_free.axes == std::vector<int>{1, 2, 3});
    CHECK(p_free.supercharge_count == 4);

    auto wire = VectorPotentialSpec::make("wire", {"0", "0", "-ln(x^2+y^2)"});
    auto p_wire = predict_supercharges(wire);
    CHECK(p_wire.axes == std::vector<int>{1, 2});
    CHECK(p_wire.supercharge_count == 3);

    auto solenoid = VectorPotentialSpec::make(
        "solenoid",
        {"-y*exp(-x^2-y^2-z^2)", "x*exp(-x^2-y^2-z^2)", "0"});
    auto p_sol = predict_supercharges(solenoid);
    CHECK(p_sol.axes == std::vector<int>{3});
    CHECK(p_sol.supercharge_count == 2);
}

TEST_CASE("field specs validate parameters", "[parity]") {
    CHECK_THROWS_AS(VectorPotentialSpec::make("bad", {"x", "0", "0"}, {{"x", 1.0}}), Error);
    CHECK_THROWS_AS(VectorPotentialSpec::make("bad", {"q", "0", "0"}), ParseError);
    auto ok = VectorPotentialSpec::make("ok", {"k*x", "0", "0"}, {{"k", 2.5}});
    CHECK(evaluate(ok.components[0], {2, 0, 0}) == 5.0);
}
