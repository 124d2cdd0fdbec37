// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "susyq/common.hpp"
#include "susyq/field.hpp"

namespace susyq {

/// A built-in field configuration together with the supercharge count its
/// geometry supports.
struct NamedField {
    VectorPotentialSpec field;
    int expected_supercharges = 1;
    std::string note;
};

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"free", "solenoid", "wire", "octopole"};
    return names;
}

namespace detail {

inline std::map<std::string, double> merge_params(std::map<std::string, double> defaults,
                                                  const std::map<std::string, double>& overrides,
                                                  const std::string& name) {
    for (const auto& [key, value] : overrides) {
        auto it = defaults.find(key);
        if (it == defaults.end())
            throw Error("field '" + name + "' has no parameter '" + key + "'");
        it->second = value;
    }
    return defaults;
}

inline void require_positive(const std::map<std::string, double>& params, const char* key) {
    if (!(params.at(key) > 0.0))
        throw Error(std::string("parameter '") + key + "' must be positive");
}

}  // namespace detail

/// The four built-in configurations. Closed forms are this library's
/// conventions for the standard geometries; singular profiles are softened by
/// a delta^2 core which enters only through even combinations and therefore
/// never changes a parity verdict.
///
///   free      A = 0                                           -> N = 4
///   solenoid  A = (-y g, x g, 0), g a Gaussian envelope
///             even in z                                       -> N = 2
///   wire      A = (0, 0, -c1 ln(x^2 + y^2 + delta^2))         -> N = 3
///   octopole  four z-oriented dipoles at (+-a, +-a, 0) with
///             alternating signs around the square             -> N = 4
inline NamedField catalog_field(const std::string& name,
                                const std::map<std::string, double>& overrides = {}) {
    if (name == "free") {
        if (!overrides.empty()) throw Error("field 'free' has no parameters");
        return {VectorPotentialSpec::make("free", {"0", "0", "0"}), 4,
                "zero vector potential"};
    }
    if (name == "solenoid") {
        auto params = detail::merge_params({{"b", 1.0}, {"w", 1.0}, {"l", 1.0}}, overrides, name);
        detail::require_positive(params, "w");
        detail::require_positive(params, "l");
        const std::string envelope = "exp(-(x^2+y^2)/w^2 - z^2/l^2)";
        return {VectorPotentialSpec::make("solenoid",
                                          {"-y*b*" + envelope, "x*b*" + envelope, "0"},
                                          std::move(params)),
                2, "axial solenoid along z with a Gaussian envelope, even in z"};
    }
    if (name == "wire") {
        auto params = detail::merge_params({{"c1", 1.0}, {"delta", 0.1}}, overrides, name);
        detail::require_positive(params, "delta");
        return {VectorPotentialSpec::make(
                    "wire", {"0", "0", "-c1*ln(x^2+y^2+delta^2)"}, std::move(params)),
                3, "straight current along z; log potential with a softened core"};
    }
    if (name == "octopole") {
        auto params =
            detail::merge_params({{"a", 1.0}, {"mu", 1.0}, {"delta", 0.1}}, overrides, name);
        detail::require_positive(params, "a");
        detail::require_positive(params, "delta");
        // Dipole at (xj, yj, 0) with moment s mu along z contributes
        // s mu (-(y - yj), x - xj, 0) / r^3; corners ordered (+a,+a),
        // (-a,+a), (-a,-a), (+a,-a) with signs +, -, +, -.
        auto r3 = [](const char* sx, const char* sy) {
            return std::string("((x") + sx + "a)^2+(y" + sy + "a)^2+z^2+delta^2)^1.5";
        };
        const std::string ax = "-mu*((y-a)/" + r3("-", "-") + " - (y-a)/" + r3("+", "-") +
                               " + (y+a)/" + r3("+", "+") + " - (y+a)/" + r3("-", "+") + ")";
        const std::string ay = "mu*((x-a)/" + r3("-", "-") + " - (x+a)/" + r3("+", "-") +
                               " + (x+a)/" + r3("+", "+") + " - (x-a)/" + r3("-", "+") + ")";
        return {VectorPotentialSpec::make("octopole", {ax, ay, "0"}, std::move(params)), 4,
                "four alternating z-oriented magnetic moments at the square corners"};
    }
    throw Error("unknown builtin field '" + name + "'");
}

}  // namespace susyq
