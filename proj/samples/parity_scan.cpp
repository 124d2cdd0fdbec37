// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0
//
// Parses three vector-potential component expressions from the command line
// and prints their parity table and the predicted supercharge count.
//
//   ./parity_scan "-y*exp(-x^2-y^2)" "x*exp(-x^2-y^2)" "0"

#include <iostream>

#include "susyq/field.hpp"

int main(int argc, char** argv) {
    using namespace susyq;
    if (argc != 4) {
        std::cerr << "usage: parity_scan A_x A_y A_z\n";
        return 2;
    }
    try {
        auto field = VectorPotentialSpec::make("cli", {argv[1], argv[2], argv[3]});
        auto signature = classify_parity(field);
        for (int j = 0; j < 3; ++j) {
            std::cout << "A_" << axis_name(axis_from_index(j)) << ":";
            for (int k = 0; k < 3; ++k)
                std::cout << "  " << axis_name(axis_from_index(k)) << "->"
                          << parity_name(signature.verdict[j][k].parity);
            std::cout << "\n";
        }
        auto prediction = predict_from_signature(signature);
        std::cout << "admissible axes:";
        for (int a : prediction.axes) std::cout << " " << a;
        std::cout << "\npredicted N = " << prediction.supercharge_count << "\n";
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
