#pragma once

#include <optional>
#include <string>

#include "zka/graph.hpp"
#include "zka/modmath.hpp"
#include "zka/sigma.hpp"

namespace zka {

struct ForgeryReport {
    SchemeId scheme;
    std::uint32_t rounds = 1;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double empirical_rate = 0.0;
    double expected_rate = 0.0;  // 2^-rounds
    double ci_low = 0.0;         // 99% Wilson interval; always contains empirical_rate
    double ci_high = 0.0;

    std::string to_json() const;
    std::string summary() const;
};

/// How much the measured impersonator knows.
enum class ForgerPower {
    Simulator,  // no witness: guess the challenge, commit via the simulator
    Witness,    // holds the real witness; sanity bound, succeeds always
};

/// Plays `trials` full sessions of the challenge-guessing forger: each round it
/// guesses c', fabricates a commitment answerable only for c', then faces the
/// verifier's real challenge. A session counts as a success iff every round's
/// response actually verifies.
ForgeryReport measure_forgery_rate(const SchemeContract& scheme, std::uint32_t rounds,
                                   std::uint64_t trials, Rng& rng,
                                   ForgerPower power = ForgerPower::Simulator);

/// First permutation in lexicographic order mapping g1 onto g2, if any.
/// Exhaustive: n! candidates, so refuses n beyond `max_n`.
std::optional<Permutation> brute_force_isomorphism(const Graph& g1, const Graph& g2,
                                                   std::uint32_t max_n = 8);

/// Deterministic backtracking: vertices in index order, colors tried
/// ascending. Returns the first valid k-coloring found, or nothing.
std::optional<Coloring> brute_force_coloring(const Graph& g, std::uint16_t k,
                                             std::uint32_t max_n = 64);

/// Smallest s in [0, p-2] with x^s = u mod p, or nothing.
std::optional<BigInt> brute_force_discrete_log(const BigInt& p, const BigInt& x, const BigInt& u,
                                               const BigInt& max_p = BigInt(1) << 20);

}  // namespace zka
