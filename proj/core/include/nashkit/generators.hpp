#pragma once

#include "nashkit/game.hpp"
#include "nashkit/rng.hpp"

namespace nashkit {

/// Seeded winner-takes-all game: at every pure profile exactly one player,
/// drawn uniformly and independently per profile, gets payoff 1 and the rest
/// get 0. Profiles are visited in lexicographic order (player 0 slowest), so
/// identical (k, n, seed) give bit-identical tensors. Requires k >= 2.
Game gen_wta(int num_players, int num_strategies, Seed seed);

/// Seeded game with every payoff entry drawn independently uniform on [0, 1),
/// filled in player-major tensor order. Requires k >= 1.
Game gen_uniform_payoffs(int num_players, int num_strategies, Seed seed);

/// 2x2 winner-takes-all fixture: player 0 wins iff the choices match, player
/// 1 wins iff they differ. Uniform/uniform is an exact Nash equilibrium with
/// value 1/2 for both players.
Game fixture_matching_pennies();

/// k-player common-payoff fixture with n = 2: every player gets 1 iff the
/// XOR of all choices is 0. Against uniform opponents every pure choice pays
/// exactly 1/2, so the all-uniform profile is an exact Nash equilibrium.
/// Requires k >= 2.
Game fixture_parity(int num_players);

}  // namespace nashkit
