#pragma once

#include "uneq/game.hpp"
#include "uneq/search.hpp"

namespace uneq {

// Attitude-weighted reward a player anticipates from playing x_own while
// believing the opponent plays somewhere in opp_set:
// pi * best case + (1 - pi) * worst case. With declared monotonicity the
// inner extremes sit at the endpoints of opp_set; otherwise they are found
// by scan plus refinement.
double anticipated_reward(const GameDefinition& game, int player, double x_own,
                          const Interval& opp_set, double theta, Attitude pi,
                          const SearchOptions& search = {});

// The single opponent strategy whose full-information response reproduces the
// attitude-weighted response. Requires declared monotonicity.
double hurwicz_point(const Interval& opp_set, Attitude pi, OpponentMonotonicity m);

struct BestResponse {
    double x = 0.0;
    double value = 0.0;
    bool tie = false;  // maximiser not unique at scan resolution
};

// Maximiser of the anticipated reward over the player's whole strategy space.
BestResponse best_response(const GameDefinition& game, int player, const Interval& opp_set,
                           double theta, Attitude pi, const SearchOptions& search = {});

// Interval hull of best responses over the player's type interval, sampled on
// a uniform grid (endpoints included). The image of a continuous response map
// over an interval is an interval, so the hull is exact up to sampling.
Interval response_set(const GameDefinition& game, int player, const Interval& opp_set,
                      Attitude pi, int theta_grid = 129, const SearchOptions& search = {});

struct ResponseSetDiagnostic {
    Interval hull{0.0, 0.0};
    double max_gap = 0.0;  // largest jump between consecutive sorted responses
    bool gap_flag = false; // true if the image looks disconnected at this resolution
};

// Samples the response map and reports gaps that suggest a non-interval image
// (a discontinuous response, which the solver assumes away).
ResponseSetDiagnostic response_set_diagnostic(const GameDefinition& game, int player,
                                              const Interval& opp_set, Attitude pi,
                                              int theta_grid = 129,
                                              const SearchOptions& search = {});

// Interval hull of full-information best responses of `player` against every
// opponent strategy in opp_set and every own type: the consistency map.
Interval certainty_response_set(const GameDefinition& game, int player, const Interval& opp_set,
                                int x_grid = 33, int theta_grid = 33,
                                const SearchOptions& search = {});

struct GameProbeReport {
    bool continuity_ok = true;       // no large finite-difference jumps found
    bool unique_maximizer_ok = true; // no best-response ties found
    int violations = 0;
    std::string detail;
};

// Spot-checks the standing assumptions on a user-supplied game: continuity of
// the reward and uniqueness of the per-strategy maximiser, on coarse grids.
// Absence of a report entry is not a guarantee.
GameProbeReport probe_game(const GameDefinition& game, int samples_per_axis = 9,
                           const SearchOptions& search = {});

}  // namespace uneq
