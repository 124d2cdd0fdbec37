// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"
#include "susyq/catalog.hpp"
#include "susyq/field.hpp"
#include "susyq/spectral.hpp"
#include "susyq/susy.hpp"

namespace susyq {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline void dump_json_17(const ordered_json& j, std::string& out) {
    switch (j.type()) {
        case ordered_json::value_t::null:
            out += "null";
            return;
        case ordered_json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case ordered_json::value_t::number_integer:
            out += std::to_string(j.get<long long>());
            return;
        case ordered_json::value_t::number_unsigned:
            out += std::to_string(j.get<unsigned long long>());
            return;
        case ordered_json::value_t::number_float: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", j.get<double>());
            out += buf;
            return;
        }
        case ordered_json::value_t::string:
            out += nlohmann::json(j.get<std::string>()).dump();
            return;
        case ordered_json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ',';
                first = false;
                dump_json_17(item, out);
            }
            out += ']';
            return;
        }
        case ordered_json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::json(key).dump();
                out += ':';
                dump_json_17(value, out);
            }
            out += '}';
            return;
        }
        default:
            throw Error("unsupported JSON value in report");
    }
}

}  // namespace detail

/// Deterministic serialization: insertion-ordered keys, floats at 17
/// significant digits, no whitespace. Identical reports produce identical
/// bytes.
inline std::string dump_json_17(const ordered_json& j) {
    std::string out;
    detail::dump_json_17(j, out);
    return out;
}

inline ordered_json to_json(const AlgebraReport& report) {
    ordered_json j;
    j["N"] = report.supercharge_count;
    j["ts"] = ordered_json::array();
    for (const auto& t : report.ts) {
        ordered_json tj;
        tj["spin"] = t.spin;
        tj["orbital"] = t.orbital;
        tj["residual_q0"] = t.residual_q0;
        j["ts"].push_back(std::move(tj));
    }
    j["pairs"] = ordered_json::array();
    for (const auto& p : report.supercharge_pairs) {
        ordered_json pj;
        pj["i"] = p.i;
        pj["j"] = p.j;
        pj["residual"] = p.value;
        j["pairs"].push_back(std::move(pj));
    }
    j["pass"] = report.pass;
    j["tol"] = report.tol;
    return j;
}

inline ordered_json to_json(const SpectrumReport& report) {
    ordered_json j;
    j["zero_modes"] = report.zero_modes;
    j["clusters"] = ordered_json::array();
    for (const auto& c : report.clusters) {
        ordered_json cj;
        cj["energy"] = c.energy;
        cj["mult"] = c.multiplicity;
        cj["divisible"] = c.divisible;
        j["clusters"].push_back(std::move(cj));
    }
    j["N"] = report.supercharge_count;
    j["pass"] = report.law_satisfied;
    return j;
}

inline ordered_json parity_report_json(const VectorPotentialSpec& field,
                                       const ParitySignature& signature,
                                       const SuperchargePrediction& prediction,
                                       const SamplerConfig& sampler, double tol) {
    ordered_json j;
    j["field"] = field.name;
    j["sampler"] = {{"count", sampler.count},
                    {"box", sampler.box_half_width},
                    {"seed", sampler.seed}};
    j["tol"] = tol;
    j["signatures"] = ordered_json::array();
    for (int comp = 0; comp < 3; ++comp)
        for (int axis = 0; axis < 3; ++axis) {
            const auto& v = signature.verdict[comp][axis];
            ordered_json sj;
            sj["component"] = std::string("A_") + axis_name(axis_from_index(comp));
            sj["axis"] = axis_name(axis_from_index(axis));
            sj["parity"] = parity_name(v.parity);
            sj["max_dev"] = v.max_deviation;
            j["signatures"].push_back(std::move(sj));
        }
    j["axes"] = prediction.axes;
    j["N"] = prediction.supercharge_count;
    return j;
}

inline ordered_json catalog_entry_json(const NamedField& entry) {
    ordered_json j;
    j["name"] = entry.field.name;
    j["params"] = ordered_json::object();
    for (const auto& [key, value] : entry.field.parameters) j["params"][key] = value;
    j["expected_N"] = entry.expected_supercharges;
    j["A"] = {entry.field.component_text[0], entry.field.component_text[1],
              entry.field.component_text[2]};
    return j;
}

// Text renderings are human summaries of the same content; the JSON form is
// the machine contract.

inline std::string text_summary(const AlgebraReport& report) {
    std::ostringstream os;
    os << "superalgebra: N=" << report.supercharge_count << " tol=" << report.tol << "\n";
    for (const auto& t : report.ts)
        os << "  T spin=" << t.spin << " orbital=" << t.orbital
           << " |{T,Q0}|/|Q0|=" << t.residual_q0 << "\n";
    os << "  max residual " << report.max_residual() << "\n";
    os << (report.pass ? "  PASS" : "  FAIL") << "\n";
    return os.str();
}

inline std::string text_summary(const SpectrumReport& report) {
    std::ostringstream os;
    os << "spectrum: " << report.eigenvalues.size() << " eigenvalues, " << report.zero_modes
       << " zero modes, divisor " << degeneracy_divisor(report.supercharge_count) << " (N="
       << report.supercharge_count << ")\n";
    for (const auto& c : report.clusters)
        os << "  E=" << c.energy << " mult=" << c.multiplicity
           << (c.divisible ? "" : "  [not divisible]") << "\n";
    os << (report.law_satisfied ? "  PASS" : "  FAIL") << "\n";
    return os.str();
}

inline std::string text_summary(const VectorPotentialSpec& field,
                                const ParitySignature& signature,
                                const SuperchargePrediction& prediction) {
    std::ostringstream os;
    os << "parity analysis of '" << field.name << "'\n";
    for (int comp = 0; comp < 3; ++comp) {
        os << "  A_" << axis_name(axis_from_index(comp)) << ":";
        for (int axis = 0; axis < 3; ++axis)
            os << " " << axis_name(axis_from_index(axis)) << "->"
               << parity_name(signature.verdict[comp][axis].parity);
        os << "\n";
    }
    os << "  admissible axes:";
    for (int a : prediction.axes) os << " " << a;
    os << "\n  predicted N=" << prediction.supercharge_count << "\n";
    return os.str();
}

}  // namespace susyq
