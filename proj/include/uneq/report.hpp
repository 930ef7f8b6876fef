#pragma once

#include <string>
#include <vector>

#include "uneq/config.hpp"

namespace uneq::cli {

// 12 significant digits, C locale, no trailing noise; identical across runs.
std::string format_real(double v);

struct ResultRow {
    std::string game;
    double theta1 = 0, theta2 = 0;
    double alpha1 = 0, beta1 = 0, alpha2 = 0, beta2 = 0;
    double pi1 = 0, pi2 = 0;
    Interval X1{0.0, 0.0}, X2{0.0, 0.0};
    double x1 = 0, x2 = 0, U1 = 0, U2 = 0;
    bool converged = false;
    double residual = 0;
    int iterations = 0;
};

extern const char* const kCsvHeader;

std::string csv_row(const ResultRow& row);
std::string csv_table(const std::vector<ResultRow>& rows);

}  // namespace uneq::cli
