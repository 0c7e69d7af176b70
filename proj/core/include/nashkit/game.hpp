#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nashkit {

/// Tolerance for probability normalization and regret comparisons. Chosen to
/// absorb double-precision accumulation over up to ~1e6 tensor entries.
inline constexpr double kProbTolerance = 1e-9;

/// One pure-strategy choice per player, choices[p] in {0, ..., n-1}.
using PureProfile = std::vector<int>;

/// A k-player normal-form game with n strategies per player and payoffs in
/// [0, 1]. The tensor is player-major; within a player, pure profiles are
/// ordered lexicographically with player 0's strategy as the slowest index.
struct Game {
  int num_players = 0;
  int num_strategies = 0;
  std::vector<double> payoffs;  // k * n^k entries

  /// n^k, the number of pure profiles.
  std::size_t num_profiles() const;

  /// Lexicographic rank of a pure profile (player 0 slowest).
  std::size_t profile_index(std::span<const int> choices) const;

  double payoff(int player, std::size_t profile) const {
    return payoffs[static_cast<std::size_t>(player) * num_profiles() + profile];
  }
  double payoff(int player, std::span<const int> choices) const {
    return payoff(player, profile_index(choices));
  }
  std::span<const double> player_payoffs(int player) const;
};

/// n^k with overflow detection; nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> checked_num_profiles(int num_players,
                                                  int num_strategies);

/// Advances a mixed-radix counter in lexicographic order (last entry
/// fastest). Returns false when the counter wraps back to all zeros.
inline bool next_profile(std::span<int> choices, int num_strategies) {
  for (int p = static_cast<int>(choices.size()) - 1; p >= 0; --p) {
    if (++choices[p] < num_strategies) return true;
    choices[p] = 0;
  }
  return false;
}

struct ValidationResult {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Checks the Game invariants and reports the first violation: k >= 1,
/// n >= 1, tensor size exactly k * n^k, every payoff in [0, 1].
ValidationResult validate_game(const Game& game);

/// A probability distribution over one player's pure strategies. The support
/// is derived from the positive entries rather than stored.
struct MixedStrategy {
  std::vector<double> probs;

  std::vector<int> support() const;
  int support_size() const;
  /// Non-negative entries summing to 1 within tolerance.
  bool is_valid(double tol = kProbTolerance) const;

  static MixedStrategy pure(int num_strategies, int strategy);
  static MixedStrategy uniform(int num_strategies);
  /// Normalizes non-negative weights into a distribution.
  static MixedStrategy from_weights(std::vector<double> weights);
};

/// One mixed strategy per player.
struct MixedProfile {
  std::vector<MixedStrategy> strategies;

  /// Sum of per-player support sizes.
  int total_support() const;

  static MixedProfile uniform(const Game& game);
  static MixedProfile pure(const Game& game, const PureProfile& choices);
};

struct BestResponse {
  int strategy = 0;
  double value = 0.0;
};

struct PlayerRegret {
  double expected_payoff = 0.0;
  double best_response_value = 0.0;
  double regret = 0.0;
};

/// Per-player payoff/regret breakdown; epsilon is the maximum regret, so the
/// profile is an eps-Nash equilibrium exactly when epsilon <= eps.
struct RegretReport {
  std::vector<PlayerRegret> per_player;
  double epsilon = 0.0;
};

/// Exact expectation of `player`'s payoff under the profile: the sum over
/// all n^k pure profiles of the payoff weighted by the product of the
/// players' probabilities, accumulated in lexicographic order.
double expected_payoff(const Game& game, const MixedProfile& profile,
                       int player);

/// Payoff to `player` for unilaterally deviating to `pure` while everyone
/// else keeps their mixed strategy; the deviator's own mixture is ignored.
double deviation_payoff(const Game& game, const MixedProfile& profile,
                        int player, int pure);

/// All n pure-deviation payoffs for one player in a single sweep over the
/// other players' combinations.
std::vector<double> deviation_payoffs(const Game& game,
                                      const MixedProfile& profile, int player);

/// Highest pure-deviation payoff; ties broken toward the lowest index.
BestResponse best_response(const Game& game, const MixedProfile& profile,
                           int player);

/// regret[p] = best_response_value[p] - expected_payoff[p], epsilon = max.
RegretReport regret_report(const Game& game, const MixedProfile& profile);

/// The (k-1)-player game obtained by fixing `player` to `pure`: the slice of
/// the tensor with that coordinate pinned, with the fixed player's payoff row
/// dropped and the remaining players kept in order. Requires k >= 2.
Game restrict_game(const Game& game, int player, int pure);

/// True iff at every pure profile exactly one player has payoff 1 and all
/// others have payoff 0 (exact comparisons; generated and serialized
/// winner-takes-all games carry exact 0/1 entries).
bool is_winner_takes_all(const Game& game);

}  // namespace nashkit
