#include "uneq/report.hpp"

#include <cstdio>

namespace uneq::cli {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

const char* const kCsvHeader =
    "game,theta1,theta2,alpha1,beta1,alpha2,beta2,pi1,pi2,"
    "X1_lo,X1_hi,X2_lo,X2_hi,x1,x2,U1,U2,converged,residual,iterations";

std::string csv_row(const ResultRow& r) {
    std::string out;
    out.reserve(256);
    out += r.game;
    for (double v : {r.theta1, r.theta2, r.alpha1, r.beta1, r.alpha2, r.beta2, r.pi1, r.pi2,
                     r.X1.lo, r.X1.hi, r.X2.lo, r.X2.hi, r.x1, r.x2, r.U1, r.U2}) {
        out += ',';
        out += format_real(v);
    }
    out += ',';
    out += r.converged ? '1' : '0';
    out += ',';
    out += format_real(r.residual);
    out += ',';
    out += std::to_string(r.iterations);
    return out;
}

std::string csv_table(const std::vector<ResultRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += csv_row(r);
        out += '\n';
    }
    return out;
}

}  // namespace uneq::cli
