// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "susyq/catalog.hpp"
#include "susyq/operators.hpp"
#include "susyq/susy.hpp"

using namespace susyq;

TEST_CASE("catalog entries parse and evaluate on the default grid", "[catalog]") {
    Grid g;  // default 7^3, h = 0.5
    REQUIRE(catalog_names() == std::vector<std::string>{"free", "solenoid", "wire", "octopole"});
    for (const auto& name : catalog_names()) {
        NamedField entry = catalog_field(name);
        CHECK(entry.field.name == name);
        for (int j = 0; j < 3; ++j)
            CHECK_NOTHROW(orbital_multiplication(g, entry.field.components[j]));
    }
}

TEST_CASE("expected supercharge counts", "[catalog]") {
    CHECK(catalog_field("free").expected_supercharges == 4);
    CHECK(catalog_field("solenoid").expected_supercharges == 2);
    CHECK(catalog_field("wire").expected_supercharges == 3);
    CHECK(catalog_field("octopole").expected_supercharges == 4);
}

TEST_CASE("sampled prediction matches the documented counts", "[catalog]") {
    for (const auto& name : catalog_names()) {
        NamedField entry = catalog_field(name);
        auto prediction = predict_supercharges(entry.field);
        INFO(name);
        CHECK(prediction.supercharge_count == entry.expected_supercharges);
    }
}

TEST_CASE("lattice certification matches the documented counts", "[catalog]") {
    Grid g = Grid::cubic(5, 0.5);
    for (const auto& name : catalog_names()) {
        NamedField entry = catalog_field(name);
        auto cert = certify(g, entry.field);
        INFO(name);
        CHECK(cert.set.supercharge_count == entry.expected_supercharges);
        CHECK(cert.report.pass);
    }
}

TEST_CASE("catalog expressions survive the print/parse round trip", "[catalog]") {
    for (const auto& name : catalog_names()) {
        NamedField entry = catalog_field(name);
        for (int j = 0; j < 3; ++j) {
            const Expr& e = entry.field.components[j];
            INFO(name << " component " << j << ": " << to_string(e));
            CHECK(e.structurally_equal(parse_expression(to_string(e))));
        }
    }
}

TEST_CASE("wire prediction is stable under the softening parameter", "[catalog]") {
    auto prediction = predict_supercharges(catalog_field("wire", {{"delta", 0.05}}).field);
    CHECK(prediction.axes == std::vector<int>{1, 2});
    CHECK(prediction.supercharge_count == 3);
}

TEST_CASE("octopole parity signature", "[catalog]") {
    auto field = catalog_field("octopole").field;
    auto sig = classify_parity(field);
    CHECK(sig.verdict[0][0].parity == Parity::Odd);   // A_x odd in x
    CHECK(sig.verdict[0][1].parity == Parity::Even);  // A_x even in y
    CHECK(sig.verdict[0][2].parity == Parity::Even);  // A_x even in z
    CHECK(sig.verdict[1][0].parity == Parity::Even);
    CHECK(sig.verdict[1][1].parity == Parity::Odd);
    CHECK(sig.verdict[2][0].parity == Parity::Zero);
}

TEST_CASE("softening delta never changes a parity verdict", "[catalog]") {
    for (const char* name : {"wire", "octopole"}) {
        auto coarse = classify_parity(catalog_field(name, {{"delta", 0.1}}).field);
        auto fine = classify_parity(catalog_field(name, {{"delta", 0.05}}).field);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                INFO(name << " component " << j << " axis " << k);
                CHECK(coarse.verdict[j][k].parity == fine.verdict[j][k].parity);
            }
    }
}

TEST_CASE("catalog rejects unknown names and bad parameters", "[catalog]") {
    CHECK_THROWS_WITH(catalog_field("dipole"), Catch::Matchers::ContainsSubstring("unknown"));
    CHECK_THROWS_AS(catalog_field("wire", {{"delta", -1.0}}), Error);
    CHECK_THROWS_AS(catalog_field("wire", {{"radius", 1.0}}), Error);
    CHECK_THROWS_AS(catalog_field("octopole", {{"a", 0.0}}), Error);
    CHECK_THROWS_AS(catalog_field("solenoid", {{"w", -2.0}}), Error);
    CHECK_THROWS_AS(catalog_field("free", {{"b", 1.0}}), Error);
    CHECK_NOTHROW(catalog_field("octopole", {{"a", 2.0}, {"mu", 0.5}}));
}
