// Compares the serial reference and the OpenMP paths of the oracle kernels.
// Build with -DNDEBUG; run on an otherwise idle machine for stable numbers.

#include <chrono>
#include <cstdio>

#include "uneq/cournot.hpp"
#include "uneq/oracle.hpp"

using namespace uneq;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double time_call(F&& f, int repeats = 3) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, seconds_since(t0));
    }
    return best;
}

}  // namespace

int main() {
    const cournot::CournotParams params(0.2, 0.2, Interval(0.1, 0.3), Interval(0.1, 0.3));
    const GameDefinition game = cournot::make_game(params);
    const AttitudeProfile profile = discrete_profile(true, true);

    oracle::OracleOptions serial;
    serial.parallel = false;
    oracle::OracleOptions parallel = serial;
    parallel.parallel = true;

    std::printf("%-24s %12s %12s %9s %s\n", "kernel", "serial [s]", "parallel [s]", "speedup",
                "match");

    {
        const oracle::GridSet full = oracle::GridSet::full(game.strategies(2), 201);
        oracle::GridSet a, b;
        const double ts = time_call([&] {
            a = oracle::grid_psi(game, 1, full, optimism(), 101, 201, false);
        });
        const double tp = time_call([&] {
            b = oracle::grid_psi(game, 1, full, optimism(), 101, 201, true);
        });
        std::printf("%-24s %12.4f %12.4f %8.2fx %s\n", "grid_psi", ts, tp, ts / tp,
                    a == b ? "yes" : "NO");
    }

    {
        oracle::GridEquilibrium a, b;
        const double ts = time_call([&] { a = oracle::grid_equilibrium(game, profile, serial); });
        const double tp =
            time_call([&] { b = oracle::grid_equilibrium(game, profile, parallel); });
        std::printf("%-24s %12.4f %12.4f %8.2fx %s\n", "grid_equilibrium", ts, tp, ts / tp,
                    (a.X1 == b.X1 && a.X2 == b.X2) ? "yes" : "NO");
    }

    {
        oracle::MaximinResult a, b;
        const double ts = time_call(
            [&] { a = oracle::exhaustive_maximin(game, 1, 0.2, 41, 17, serial); }, 1);
        const double tp = time_call(
            [&] { b = oracle::exhaustive_maximin(game, 1, 0.2, 41, 17, parallel); }, 1);
        std::printf("%-24s %12.4f %12.4f %8.2fx %s\n", "exhaustive_maximin", ts, tp, ts / tp,
                    a.pi_sharp == b.pi_sharp ? "yes" : "NO");
    }

    return 0;
}
