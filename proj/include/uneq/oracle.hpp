#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "uneq/game.hpp"

namespace uneq::oracle {

// Brute-force cross-checking layer. Everything here re-implements its
// searches with plain loops over grids and keeps no code in common with the
// interval solver or the closed forms it arbitrates.

// Finite stand-in for a strategy set: membership flags over an evenly spaced
// grid on a base interval.
struct GridSet {
    Interval base{0.0, 1.0};
    int resolution = 2;
    std::vector<std::uint8_t> member;

    GridSet() = default;
    GridSet(Interval base_, int resolution_);

    static GridSet full(const Interval& base, int resolution);
    static GridSet empty_set(const Interval& base, int resolution);
    // Marks every grid point inside span (closed, with half-cell slack).
    static GridSet from_span(const Interval& base, int resolution, const Interval& span);

    double point(int k) const {
        return k == resolution - 1 ? base.hi
                                   : base.lo + base.width() * k / (resolution - 1);
    }
    double cell() const { return base.width() / (resolution - 1); }

    int count() const;
    bool empty() const { return count() == 0; }
    double min_point() const;
    double max_point() const;
    Interval hull() const;
    std::vector<int> member_indices() const;

    friend bool operator==(const GridSet&, const GridSet&) = default;
};

struct OracleOptions {
    int strategy_resolution = 201;
    int type_resolution = 101;
    int attitude_resolution = 201;
    // type samples per sweep inside the refined equilibrium path
    int equilibrium_type_resolution = 17;
    // opponent scan density when no monotonicity is declared
    int inner_scan_resolution = 129;
    double endpoint_tolerance = 1e-10;
    double x_tolerance = 1e-5;    // bracket width before the quadratic step
    double margin_tolerance = 1e-7;
    int max_iter = 400;
    int cycle_restarts = 6;
    bool parallel = true;         // OpenMP over grid axes; serial path is the reference
};

// Image of the attitude response map at grid resolution: for every type
// sample, the best reply to the member points of opp is located by scanning
// the whole own-strategy grid; the union over types is returned. No interval
// hull is taken.
GridSet grid_psi(const GameDefinition& game, int player, const GridSet& opp, Attitude pi,
                 int type_resolution, int strategy_resolution, bool parallel = true);

struct GridEquilibrium {
    GridSet X1, X2;
    int iterations = 0;
    bool fixed_point = false;
    // a cycle is reported with the union of its states; when every endpoint
    // of the cycle moves by at most one cell, the set is as converged as the
    // grid can express (a true endpoint falling between two cells flips the
    // bordering membership bit each sweep)
    bool cycle = false;
    bool stable_within_cell = false;
    int cycle_length = 0;
    int restarts = 0;

    bool settled() const { return fixed_point || (cycle && stable_within_cell); }
};

// Iterates the set-valued map from the full grids until the membership
// vectors repeat exactly. Maps whose endpoints flip sign-symmetrically
// produce wide period-2 cycles; those restart from the endpoint midpoints.
GridEquilibrium grid_equilibrium(const GameDefinition& game, const AttitudeProfile& profile,
                                 const OracleOptions& opt = {});

// Endpoint-pair equilibrium refined far below grid resolution; used by the
// maximin and dominance enumerations, whose verdicts are too sensitive for
// snapped endpoints. Independent reimplementation: ternary refinement and
// plain scans only.
struct EndpointEquilibrium {
    std::array<double, 4> s{0.0, 0.0, 0.0, 0.0};  // lo1, hi1, lo2, hi2
    bool converged = false;
    int iterations = 0;
    int restarts = 0;

    Interval of(int player) const {
        return player == 1 ? Interval(s[0], s[1]) : Interval(s[2], s[3]);
    }
};

EndpointEquilibrium endpoint_equilibrium(const GameDefinition& game,
                                         const AttitudeProfile& profile,
                                         const OracleOptions& opt = {},
                                         const EndpointEquilibrium* warm = nullptr);

// Realised reward of `player` once both types are fixed, at the given
// equilibrium.
double ex_post_value(const GameDefinition& game, const EndpointEquilibrium& eq, int player,
                     double theta_own, double theta_opp, const AttitudeProfile& profile,
                     const OracleOptions& opt = {});

struct MaximinResult {
    double pi_sharp = 0.0;
    double value = 0.0;
    std::vector<double> worst_case;  // guaranteed reward per own-attitude grid point
    int pi_resolution = 0;
};

// Full enumeration of max over own attitude of min over opponent attitude
// and type, both attitudes on a uniform grid of [0, 1].
MaximinResult exhaustive_maximin(const GameDefinition& game, int player, double theta_i,
                                 int pi_resolution, int theta_j_resolution,
                                 const OracleOptions& opt = {});

enum class Verdict { optimism, pessimism, none, indifferent };

struct DominanceVerdict {
    Verdict verdict = Verdict::none;
    double min_margin_optimism = 0.0;   // worst case of U(O) - U(P)
    double min_margin_pessimism = 0.0;  // worst case of U(P) - U(O)
    double witness_theta_j = 0.0;
    bool witness_opp_optimist = false;
};

// Enumerates both opponent attitudes and a grid of opponent types.
DominanceVerdict exhaustive_dominance(const GameDefinition& game, int player, double theta_i,
                                      int theta_j_resolution, const OracleOptions& opt = {});

}  // namespace uneq::oracle
