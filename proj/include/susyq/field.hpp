// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "susyq/common.hpp"
#include "susyq/expr.hpp"

namespace susyq {

/// Three-component vector potential A(x, y, z). Components are kept both as
/// authored text and as parsed trees with all named parameters substituted.
struct VectorPotentialSpec {
    std::string name;
    std::array<std::string, 3> component_text;
    std::array<Expr, 3> components;
    std::map<std::string, double> parameters;

    static VectorPotentialSpec make(std::string name,
                                    std::array<std::string, 3> text,
                                    std::map<std::string, double> params = {}) {
        for (const auto& [key, value] : params) {
            if (key == "x" || key == "y" || key == "z")
                throw Error("parameter name '" + key + "' collides with a coordinate");
            if (!std::isfinite(value))
                throw Error("parameter '" + key + "' is not finite");
        }
        VectorPotentialSpec spec;
        spec.name = std::move(name);
        spec.component_text = std::move(text);
        spec.parameters = std::move(params);
        for (int j = 0; j < 3; ++j)
            spec.components[j] = parse_expression(spec.component_text[j], spec.parameters);
        return spec;
    }
};

/// Loads a field definition file: {"name": str, "params": {str: number},
/// "A": [str, str, str]}.
inline VectorPotentialSpec field_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("name") || !j.contains("A"))
        throw Error("field definition must be an object with \"name\" and \"A\"");
    auto comps = j.at("A");
    if (!comps.is_array() || comps.size() != 3)
        throw Error("field definition \"A\" must list exactly three component expressions");
    std::map<std::string, double> params;
    if (j.contains("params")) {
        for (const auto& [key, value] : j.at("params").items()) {
            if (!value.is_number()) throw Error("parameter '" + key + "' must be a number");
            params[key] = value.get<double>();
        }
    }
    return VectorPotentialSpec::make(
        j.at("name").get<std::string>(),
        {comps[0].get<std::string>(), comps[1].get<std::string>(), comps[2].get<std::string>()},
        std::move(params));
}

inline VectorPotentialSpec load_field_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open field file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("invalid JSON in '" + path + "': " + e.what());
    }
    return field_from_json(j);
}

// ---------------------------------------------------------------------------
// Parity classification by randomized sampling.

enum class Parity { Even, Odd, Zero, None };

inline constexpr const char* parity_name(Parity p) {
    switch (p) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        case Parity::Zero: return "zero";
        case Parity::None: return "none";
    }
    return "?";
}

struct SamplerConfig {
    int count = 128;
    double box_half_width = 2.0;
    std::uint64_t seed = 0xC1F0;
    int max_retries = 64;  // consecutive domain-error redraws per sample
};

inline constexpr double kDefaultParityTol = 1e-9;

struct ParityVerdict {
    Parity parity = Parity::None;
    double max_deviation = 0.0;
};

namespace detail {

// mt19937_64 mapped to [lo, hi) via the top 53 bits; the standard pins the
// engine's output sequence, so samples are reproducible everywhere.
class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace detail

/// Classifies the behaviour of `e` under x_k -> -x_k on random sample points.
/// "zero" means the component vanishes (and thus passes both the even and the
/// odd test); "none" means both tests fail beyond tol * scale, where scale is
/// the largest sampled magnitude floored at 1.
inline ParityVerdict parity_of_component(const Expr& e, Axis axis, const SamplerConfig& sampler,
                                         double tol = kDefaultParityTol) {
    if (sampler.count < 16) throw Error("parity sampler needs at least 16 points");
    if (!(tol > 0.0)) throw Error("parity tolerance must be positive");
    detail::SampleRng rng(sampler.seed);
    const double b = sampler.box_half_width;
    std::vector<std::array<double, 2>> values;
    values.reserve(sampler.count);
    for (int i = 0; i < sampler.count; ++i) {
        int attempts = 0;
        for (;;) {
            std::array<double, 3> p{rng.uniform(-b, b), rng.uniform(-b, b), rng.uniform(-b, b)};
            std::array<double, 3> q = p;
            q[static_cast<int>(axis)] = -q[static_cast<int>(axis)];
            try {
                double v = evaluate(e, p);
                double w = evaluate(e, q);
                values.push_back({v, w});
                break;
            } catch (const DomainError&) {
                if (++attempts > sampler.max_retries)
                    throw DomainError("persistent domain errors while sampling parity of '" +
                                      to_string(e) + "'");
            }
        }
    }
    double scale = 1.0;
    for (const auto& [v, w] : values) scale = std::max({scale, std::fabs(v), std::fabs(w)});
    double dev_even = 0.0, dev_odd = 0.0, dev_zero = 0.0;
    for (const auto& [v, w] : values) {
        dev_even = std::max(dev_even, std::fabs(w - v));
        dev_odd = std::max(dev_odd, std::fabs(w + v));
        dev_zero = std::max({dev_zero, std::fabs(v), std::fabs(w)});
    }
    const double bound = tol * scale;
    if (dev_zero <= bound) return {Parity::Zero, dev_zero};
    if (dev_even <= bound) return {Parity::Even, dev_even};
    if (dev_odd <= bound) return {Parity::Odd, dev_odd};
    return {Parity::None, std::min(dev_even, dev_odd)};
}

/// verdict[j][k] classifies component A_j under inversion of axis k.
struct ParitySignature {
    std::array<std::array<ParityVerdict, 3>, 3> verdict;
};

inline ParitySignature classify_parity(const VectorPotentialSpec& field,
                                       const SamplerConfig& sampler = {},
                                       double tol = kDefaultParityTol) {
    ParitySignature sig;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            sig.verdict[j][k] =
                parity_of_component(field.components[j], axis_from_index(k), sampler, tol);
    return sig;
}

struct SuperchargePrediction {
    std::vector<int> axes;      // 1-based admissible axes, ascending
    int supercharge_count = 1;  // N, counting the base supercharge
};

/// Axis i is admissible when A_i is odd (or vanishes) under x_i -> -x_i while
/// the two other components are even (or vanish) under the same inversion.
inline SuperchargePrediction predict_from_signature(const ParitySignature& sig) {
    SuperchargePrediction out;
    for (int i = 0; i < 3; ++i) {
        Parity own = sig.verdict[i][i].parity;
        if (own != Parity::Odd && own != Parity::Zero) continue;
        bool ok = true;
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            Parity p = sig.verdict[j][i].parity;
            if (p != Parity::Even && p != Parity::Zero) ok = false;
        }
        if (ok) out.axes.push_back(i + 1);
    }
    out.supercharge_count = static_cast<int>(out.axes.size()) + 1;
    return out;
}

inline SuperchargePrediction predict_supercharges(const VectorPotentialSpec& field,
                                                  const SamplerConfig& sampler = {},
                                                  double tol = kDefaultParityTol) {
    return predict_from_signature(classify_parity(field, sampler, tol));
}

}  // namespace susyq
