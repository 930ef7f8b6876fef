#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>

#include "uneq/interval.hpp"

namespace uneq {

// How a player's reward varies in the opponent's strategy. When declared,
// inner worst/best cases over an opponent set reduce to its endpoints.
enum class OpponentMonotonicity { decreasing, increasing, unknown };

// Degree of optimism in [0, 1]: 1 weighs the best case, 0 the worst case.
class Attitude {
  public:
    Attitude() = default;
    explicit Attitude(double v) : v_(v) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("Attitude: value must lie in [0, 1], got " +
                                        std::to_string(v));
    }
    double value() const { return v_; }
    bool is_optimist() const { return v_ == 1.0; }
    bool is_pessimist() const { return v_ == 0.0; }

    friend bool operator==(const Attitude&, const Attitude&) = default;

  private:
    double v_ = 0.0;
};

inline Attitude optimism() { return Attitude(1.0); }
inline Attitude pessimism() { return Attitude(0.0); }

struct AttitudeProfile {
    Attitude p1;
    Attitude p2;

    AttitudeProfile() = default;
    AttitudeProfile(Attitude a1, Attitude a2) : p1(a1), p2(a2) {}
    AttitudeProfile(double a1, double a2) : p1(a1), p2(a2) {}

    const Attitude& of(int player) const { return player == 1 ? p1 : p2; }

    friend bool operator==(const AttitudeProfile&, const AttitudeProfile&) = default;
};

// The four discrete profiles of the two-stage attitude game, (p1, p2) with
// true = optimist.
inline AttitudeProfile discrete_profile(bool p1_optimist, bool p2_optimist) {
    return AttitudeProfile(p1_optimist ? 1.0 : 0.0, p2_optimist ? 1.0 : 0.0);
}

// Abstract two-player game: a reward evaluator plus per-player strategy and
// type intervals. The reward must be continuous in (x, theta) and have a
// unique maximiser in the own strategy for every fixed opponent strategy
// and type; these assumptions are probed, not enforced.
struct GameDefinition {
    // (player, x1, x2, theta_of_player) -> reward of that player
    std::function<double(int, double, double, double)> utility;
    std::array<Interval, 2> strategy_space;
    std::array<Interval, 2> type_space;
    std::array<OpponentMonotonicity, 2> opponent_monotonicity{OpponentMonotonicity::unknown,
                                                              OpponentMonotonicity::unknown};

    const Interval& strategies(int player) const { return strategy_space[player - 1]; }
    const Interval& types(int player) const { return type_space[player - 1]; }
    OpponentMonotonicity monotonicity(int player) const {
        return opponent_monotonicity[player - 1];
    }

    double reward(int player, double x1, double x2, double theta) const {
        return utility(player, x1, x2, theta);
    }

    // Reward with arguments given as (own strategy, opponent strategy).
    double reward_own(int player, double x_own, double x_opp, double theta) const {
        return player == 1 ? utility(1, x_own, x_opp, theta) : utility(2, x_opp, x_own, theta);
    }
};

inline int opponent_of(int player) { return 3 - player; }

inline void require_player(int player) {
    if (player != 1 && player != 2)
        throw std::invalid_argument("player index must be 1 or 2");
}

// A player's private view: own index, true type, chosen attitude.
struct PlayerContext {
    int index = 1;
    double theta = 0.0;
    Attitude attitude;

    void validate(const GameDefinition& game) const {
        require_player(index);
        if (!game.types(index).contains(theta))
            throw std::invalid_argument("PlayerContext: theta outside the player's type space");
    }
};

}  // namespace uneq
