#pragma once

#include "dunkl/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dunkl {

// Reference data of an irreducible finite reflection group.
struct CoxeterDatum {
    std::string label;
    int rank = 0;
    bool real = true;                    // Coxeter group (has a Coxeter matrix)
    std::vector<std::vector<int>> m;     // Coxeter matrix, real groups only
    std::vector<int> short_roots;        // simple roots of the second length class
    int h = 0;                           // Coxeter number, real groups only
    std::vector<int> exponents;          // m_i
    std::vector<int> degrees;            // d_i = m_i + 1
    std::vector<int> coexponents;        // m_i^* = codegree + 1
    int mirrors = 0;                     // |H|
    long long order() const;
};

// "A3", "B4", "D5", "E6", "F4", "H3", "I2(5)", "ST24", ...
CoxeterDatum coxeter_datum(const std::string& label);
bool label_supported(const std::string& label);
std::vector<std::string> shipped_labels();

// Generating data from which the mirror set is closed under reflections.
struct RootData {
    FieldSpec field;
    ExactMatrix gram;
    std::vector<Vec> generators;
    std::string version;
};

RootData root_data(const std::string& label);

} // namespace dunkl
