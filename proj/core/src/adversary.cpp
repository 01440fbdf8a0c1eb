#include "zka/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace zka {

namespace {

// 99% two-sided normal quantile, pinned so reports are reproducible.
constexpr double kZ99 = 2.5758293035489004;

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = kZ99 * kZ99;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = (kZ99 / denom) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace

std::string ForgeryReport::to_json() const {
    nlohmann::json j{
        {"scheme", to_string(scheme)},
        {"rounds", rounds},
        {"trials", trials},
        {"successes", successes},
        {"empirical_rate", empirical_rate},
        {"expected_rate", expected_rate},
        {"ci99", {ci_low, ci_high}},
    };
    return j.dump();
}

std::string ForgeryReport::summary() const {
    std::ostringstream out;
    out << to_string(scheme) << " k=" << rounds << ": " << successes << "/" << trials << " = "
        << empirical_rate << " (expected " << expected_rate << ", 99% CI [" << ci_low << ", "
        << ci_high << "])";
    return out.str();
}

ForgeryReport measure_forgery_rate(const SchemeContract& scheme, std::uint32_t rounds,
                                   std::uint64_t trials, Rng& rng, ForgerPower power) {
    if (rounds < 1) throw BadParameters("forgery needs at least one round");
    if (trials < 1) throw BadParameters("forgery needs at least one trial");
    if (power == ForgerPower::Witness && !scheme.has_witness()) {
        throw BadParameters("witness-powered forger needs a witness");
    }

    std::uint64_t successes = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        bool all_rounds = true;
        for (std::uint32_t round = 0; round < rounds; ++round) {
            Bytes commitment, answer;
            Challenge real_challenge;
            if (power == ForgerPower::Witness) {
                auto [c_bytes, ephemeral] = scheme.commit(rng);
                real_challenge = Challenge{static_cast<std::uint8_t>(rng.bit())};
                commitment = std::move(c_bytes);
                answer = scheme.respond(ephemeral, real_challenge);
            } else {
                // Commit before seeing the challenge: pick a guess c', build a
                // transcript that verifies only for c', then learn the real c.
                Challenge guess{static_cast<std::uint8_t>(rng.bit())};
                auto [c_bytes, response] = scheme.simulate(guess, rng);
                real_challenge = Challenge{static_cast<std::uint8_t>(rng.bit())};
                commitment = std::move(c_bytes);
                answer = std::move(response);
            }
            if (!scheme.verify_round(commitment, real_challenge, answer)) {
                all_rounds = false;
                break;
            }
        }
        if (all_rounds) ++successes;
    }

    ForgeryReport report;
    report.scheme = scheme.id();
    report.rounds = rounds;
    report.trials = trials;
    report.successes = successes;
    report.empirical_rate = static_cast<double>(successes) / static_cast<double>(trials);
    report.expected_rate = std::ldexp(1.0, -static_cast<int>(rounds));
    std::tie(report.ci_low, report.ci_high) = wilson_interval(successes, trials);
    return report;
}

std::optional<Permutation> brute_force_isomorphism(const Graph& g1, const Graph& g2,
                                                   std::uint32_t max_n) {
    if (g1.size() > max_n || g2.size() > max_n) {
        throw TooLarge("graphs too large for exhaustive isomorphism search");
    }
    if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    std::vector<std::uint32_t> images(g1.size());
    std::iota(images.begin(), images.end(), 0);
    do {
        Permutation p(images);
        if (apply_permutation(g1, p) == g2) return p;
    } while (std::next_permutation(images.begin(), images.end()));
    return std::nullopt;
}

std::optional<Coloring> brute_force_coloring(const Graph& g, std::uint16_t k,
                                             std::uint32_t max_n) {
    if (k < 1) throw BadParameters("k must be at least 1");
    if (g.size() > max_n) throw TooLarge("graph too large for backtracking search");
    const std::uint32_t n = g.size();
    std::vector<std::uint16_t> colors(n, 0);  // 0 = unassigned
    std::uint32_t v = 0;
    while (true) {
        // Advance vertex v to its next color that fits below it.
        std::uint16_t candidate = colors[v] + 1;
        bool placed = false;
        for (; candidate <= k; ++candidate) {
            bool clash = false;
            for (std::uint32_t w = 0; w < v; ++w) {
                if (colors[w] == candidate && g.edge(v, w)) {
                    clash = true;
                    break;
                }
            }
            if (!clash) {
                colors[v] = candidate;
                placed = true;
                break;
            }
        }
        if (placed) {
            if (v + 1 == n) return Coloring{k, colors};
            ++v;
        } else {
            colors[v] = 0;
            if (v == 0) return std::nullopt;
            --v;
        }
    }
}

std::optional<BigInt> brute_force_discrete_log(const BigInt& p, const BigInt& x, const BigInt& u,
                                               const BigInt& max_p) {
    if (p > max_p) throw TooLarge("modulus too large for exhaustive search");
    if (p < 3) throw BadModulus("modulus must be at least 3");
    if (x < 1 || x >= p || u < 1 || u >= p) throw BadParameters("x and u must lie in [1, p-1]");
    BigInt power = 1;
    for (BigInt s = 0; s <= p - 2; ++s) {
        if (power == u) return s;
        power = (power * x) % p;
    }
    return std::nullopt;
}

}  // namespace zka
