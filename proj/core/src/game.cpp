#include "nashkit/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nashkit {

namespace {

void check_player(const Game& game, int player) {
  if (player < 0 || player >= game.num_players)
    throw std::invalid_argument("player index out of range");
}

void check_strategy(const Game& game, int strategy) {
  if (strategy < 0 || strategy >= game.num_strategies)
    throw std::invalid_argument("strategy index out of range");
}

void check_profile(const Game& game, const MixedProfile& profile) {
  if (static_cast<int>(profile.strategies.size()) != game.num_players)
    throw std::invalid_argument("profile has wrong number of players");
  for (const MixedStrategy& m : profile.strategies)
    if (static_cast<int>(m.probs.size()) != game.num_strategies)
      throw std::invalid_argument("mixed strategy has wrong length");
}

// Strides for the lexicographic tensor layout: player p's coordinate moves
// in steps of n^(k-1-p).
std::vector<std::size_t> strides(const Game& game) {
  std::vector<std::size_t> s(game.num_players, 1);
  for (int p = game.num_players - 2; p >= 0; --p)
    s[p] = s[p + 1] * static_cast<std::size_t>(game.num_strategies);
  return s;
}

}  // namespace

std::optional<std::uint64_t> checked_num_profiles(int num_players,
                                                  int num_strategies) {
  if (num_players < 0 || num_strategies < 0) return std::nullopt;
  std::uint64_t count = 1;
  const auto n = static_cast<std::uint64_t>(num_strategies);
  for (int p = 0; p < num_players; ++p) {
    if (n != 0 && count > std::numeric_limits<std::uint64_t>::max() / n)
      return std::nullopt;
    count *= n;
  }
  return count;
}

std::size_t Game::num_profiles() const {
  std::size_t count = 1;
  for (int p = 0; p < num_players; ++p)
    count *= static_cast<std::size_t>(num_strategies);
  return count;
}

std::size_t Game::profile_index(std::span<const int> choices) const {
  std::size_t idx = 0;
  for (int c : choices)
    idx = idx * static_cast<std::size_t>(num_strategies) +
          static_cast<std::size_t>(c);
  return idx;
}

std::span<const double> Game::player_payoffs(int player) const {
  const std::size_t count = num_profiles();
  return {payoffs.data() + static_cast<std::size_t>(player) * count, count};
}

ValidationResult validate_game(const Game& game) {
  if (game.num_players < 1)
    return {false, "num_players must be at least 1"};
  if (game.num_strategies < 1)
    return {false, "num_strategies must be at least 1"};
  const auto profiles =
      checked_num_profiles(game.num_players, game.num_strategies);
  if (!profiles ||
      *profiles > std::numeric_limits<std::uint64_t>::max() /
                      static_cast<std::uint64_t>(game.num_players))
    return {false, "game dimensions overflow the tensor size"};
  const std::uint64_t expected =
      *profiles * static_cast<std::uint64_t>(game.num_players);
  if (game.payoffs.size() != expected) {
    std::ostringstream msg;
    msg << "payoff tensor has " << game.payoffs.size() << " entries, expected "
        << expected;
    return {false, msg.str()};
  }
  for (std::size_t i = 0; i < game.payoffs.size(); ++i) {
    const double v = game.payoffs[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      std::ostringstream msg;
      msg << "payoff entry " << i << " = " << v << " is outside [0, 1]";
      return {false, msg.str()};
    }
  }
  return {};
}

std::vector<int> MixedStrategy::support() const {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(probs.size()); ++i)
    if (probs[i] > 0.0) s.push_back(i);
  return s;
}

int MixedStrategy::support_size() const {
  return static_cast<int>(
      std::count_if(probs.begin(), probs.end(), [](double p) { return p > 0.0; }));
}

bool MixedStrategy::is_valid(double tol) const {
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) return false;
    sum += p;
  }
  return std::abs(sum - 1.0) <= tol;
}

MixedStrategy MixedStrategy::pure(int num_strategies, int strategy) {
  MixedStrategy m;
  m.probs.assign(static_cast<std::size_t>(num_strategies), 0.0);
  m.probs.at(static_cast<std::size_t>(strategy)) = 1.0;
  return m;
}

MixedStrategy MixedStrategy::uniform(int num_strategies) {
  MixedStrategy m;
  m.probs.assign(static_cast<std::size_t>(num_strategies),
                 1.0 / num_strategies);
  return m;
}

MixedStrategy MixedStrategy::from_weights(std::vector<double> weights) {
  double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(sum > 0.0)) throw std::invalid_argument("weights must sum to > 0");
  for (double& w : weights) w /= sum;
  MixedStrategy m;
  m.probs = std::move(weights);
  return m;
}

int MixedProfile::total_support() const {
  int total = 0;
  for (const MixedStrategy& m : strategies) total += m.support_size();
  return total;
}

MixedProfile MixedProfile::uniform(const Game& game) {
  MixedProfile p;
  p.strategies.assign(static_cast<std::size_t>(game.num_players),
                      MixedStrategy::uniform(game.num_strategies));
  return p;
}

MixedProfile MixedProfile::pure(const Game& game, const PureProfile& choices) {
  if (static_cast<int>(choices.size()) != game.num_players)
    throw std::invalid_argument("pure profile has wrong length");
  MixedProfile p;
  p.strategies.reserve(choices.size());
  for (int c : choices)
    p.strategies.push_back(MixedStrategy::pure(game.num_strategies, c));
  return p;
}

double expected_payoff(const Game& game, const MixedProfile& profile,
                       int player) {
  check_player(game, player);
  check_profile(game, profile);
  const std::span<const double> u = game.player_payoffs(player);
  std::vector<int> choices(static_cast<std::size_t>(game.num_players), 0);
  double sum = 0.0;
  std::size_t idx = 0;
  do {
    double w = 1.0;
    for (int q = 0; q < game.num_players; ++q)
      w *= profile.strategies[q].probs[choices[q]];
    sum += w * u[idx];
    ++idx;
  } while (next_profile(choices, game.num_strategies));
  return sum;
}

std::vector<double> deviation_payoffs(const Game& game,
                                      const MixedProfile& profile,
                                      int player) {
  check_player(game, player);
  check_profile(game, profile);
  const int k = game.num_players;
  const int n = game.num_strategies;
  const std::span<const double> u = game.player_payoffs(player);
  const std::vector<std::size_t> stride = strides(game);

  std::vector<double> values(static_cast<std::size_t>(n), 0.0);
  // Odometer over the other players' choices in lexicographic order; the
  // deviating player's coordinate stays 0 and is added per strategy below.
  std::vector<int> choices(static_cast<std::size_t>(k), 0);
  for (;;) {
    double w = 1.0;
    std::size_t base = 0;
    for (int q = 0; q < k; ++q) {
      if (q == player) continue;
      w *= profile.strategies[q].probs[choices[q]];
      base += static_cast<std::size_t>(choices[q]) * stride[q];
    }
    if (w != 0.0) {
      for (int j = 0; j < n; ++j)
        values[j] += w * u[base + static_cast<std::size_t>(j) * stride[player]];
    }
    // Advance the counter, skipping the deviating player's slot.
    int q = k - 1;
    for (; q >= 0; --q) {
      if (q == player) continue;
      if (++choices[q] < n) break;
      choices[q] = 0;
    }
    if (q < 0) break;
  }
  return values;
}

double deviation_payoff(const Game& game, const MixedProfile& profile,
                        int player, int pure) {
  check_strategy(game, pure);
  return deviation_payoffs(game, profile, player)[static_cast<std::size_t>(pure)];
}

BestResponse best_response(const Game& game, const MixedProfile& profile,
                           int player) {
  const std::vector<double> values = deviation_payoffs(game, profile, player);
  BestResponse br{0, values[0]};
  for (int j = 1; j < static_cast<int>(values.size()); ++j) {
    if (values[j] > br.value) {  // strict: ties keep the lowest index
      br.strategy = j;
      br.value = values[j];
    }
  }
  return br;
}

RegretReport regret_report(const Game& game, const MixedProfile& profile) {
  RegretReport report;
  report.per_player.reserve(static_cast<std::size_t>(game.num_players));
  report.epsilon = 0.0;
  for (int p = 0; p < game.num_players; ++p) {
    PlayerRegret r;
    r.expected_payoff = expected_payoff(game, profile, p);
    r.best_response_value = best_response(game, profile, p).value;
    r.regret = r.best_response_value - r.expected_payoff;
    report.epsilon = std::max(report.epsilon, r.regret);
    report.per_player.push_back(r);
  }
  return report;
}

Game restrict_game(const Game& game, int player, int pure) {
  if (game.num_players < 2)
    throw std::invalid_argument("restrict_game requires at least 2 players");
  check_player(game, player);
  check_strategy(game, pure);

  const int k = game.num_players;
  const int n = game.num_strategies;
  Game sub;
  sub.num_players = k - 1;
  sub.num_strategies = n;
  sub.payoffs.resize(static_cast<std::size_t>(k - 1) * sub.num_profiles());

  std::vector<int> full(static_cast<std::size_t>(k), 0);
  full[player] = pure;
  std::vector<int> rest(static_cast<std::size_t>(k - 1), 0);
  std::size_t sub_idx = 0;
  const std::size_t sub_profiles = sub.num_profiles();
  do {
    for (int q = 0, r = 0; q < k; ++q) {
      if (q == player) continue;
      full[q] = rest[r++];
    }
    const std::size_t full_idx = game.profile_index(full);
    for (int q = 0, r = 0; q < k; ++q) {
      if (q == player) continue;
      sub.payoffs[static_cast<std::size_t>(r) * sub_profiles + sub_idx] =
          game.payoff(q, full_idx);
      ++r;
    }
    ++sub_idx;
  } while (next_profile(rest, n));
  return sub;
}

bool is_winner_takes_all(const Game& game) {
  if (game.num_players < 1 || game.num_strategies < 1) return false;
  const std::size_t profiles = game.num_profiles();
  if (game.payoffs.size() !=
      profiles * static_cast<std::size_t>(game.num_players))
    return false;
  for (std::size_t s = 0; s < profiles; ++s) {
    int winners = 0;
    for (int p = 0; p < game.num_players; ++p) {
      const double v = game.payoff(p, s);
      if (v == 1.0)
        ++winners;
      else if (v != 0.0)
        return false;
    }
    if (winners != 1) return false;
  }
  return true;
}

}  // namespace nashkit
