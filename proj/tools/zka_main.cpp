// zka: generate key pairs, run authentication sessions over TCP or loopback,
// and measure what an adversary without the witness can do.
//
// Exit codes: 0 accepted / command succeeded, 1 rejected, 2 bad input or
// usage, 3 protocol or transport failure.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "zka/adversary.hpp"
#include "zka/keyfile.hpp"
#include "zka/rng.hpp"
#include "zka/scheme_coloring.hpp"
#include "zka/scheme_graph_iso.hpp"
#include "zka/scheme_modexp.hpp"
#include "zka/scheme_subgraph_iso.hpp"
#include "zka/schemes.hpp"
#include "zka/transport.hpp"
#include "zka/wire.hpp"

using namespace zka;

namespace {

std::uint64_t random_seed() {
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) ^ rd();
}

struct HostPort {
    std::string host;
    std::uint16_t port;
};

HostPort parse_host_port(const std::string& text) {
    auto colon = text.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
        throw BadParameters("expected HOST:PORT, got '" + text + "'");
    int port = 0;
    try {
        port = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw BadParameters("expected HOST:PORT, got '" + text + "'");
    }
    if (port < 1 || port > 65535) throw BadParameters("port out of range in '" + text + "'");
    return {text.substr(0, colon), static_cast<std::uint16_t>(port)};
}

struct KeygenShape {
    std::uint32_t n = 0;       // 0: scheme default
    std::uint32_t host_n = 0;  // 0: twice n
    std::uint16_t k = 3;
    std::string p = "1009";
};

std::unique_ptr<SchemeContract> generate_keypair(SchemeId scheme, const KeygenShape& shape,
                                                 Rng& rng) {
    switch (scheme) {
        case SchemeId::GraphIso: {
            std::uint32_t n = shape.n ? shape.n : 8;
            return std::make_unique<graph_iso::Scheme>(graph_iso::keygen(n, 0.5, rng));
        }
        case SchemeId::SubgraphIso: {
            std::uint32_t n = shape.n ? shape.n : 6;
            std::uint32_t host = shape.host_n ? shape.host_n : 2 * n;
            return std::make_unique<subgraph_iso::Scheme>(subgraph_iso::keygen(n, host, rng));
        }
        case SchemeId::Coloring: {
            std::uint32_t n = shape.n ? shape.n : 9;
            return std::make_unique<coloring::Scheme>(coloring::keygen(n, shape.k, rng));
        }
        case SchemeId::ModExp: {
            BigInt p;
            try {
                p = BigInt(shape.p);
            } catch (const std::exception&) {
                throw BadParameters("--p must be a decimal integer, got '" + shape.p + "'");
            }
            return std::make_unique<modexp::Scheme>(modexp::keygen(p, rng));
        }
    }
    throw BadParameters("unknown scheme id");
}

LoadedKey load_private(const std::string& path) {
    LoadedKey key = load_key_file(path);
    if (!key.has_secret)
        throw InvalidKeyPair(path + ": this command needs the private (.key) file");
    return key;
}

int run_verifier_session(ByteStream& stream, const LoadedKey& pub, const SessionConfig& config,
                         Rng& rng) {
    bool accepted =
        verifier_endpoint(stream, make_verifier_contract, pub.contract->statement_bytes(), config, rng);
    std::cout << (accepted ? "accepted" : "rejected") << std::endl;
    return accepted ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-knowledge authentication: key generation, sessions, attacks"};
    app.require_subcommand(1);
    int rc = 0;

    std::uint64_t seed = random_seed();
    std::string scheme_name;
    std::string key_path, pub_path, out_prefix, verifier_addr;
    std::uint32_t rounds = kDefaultRounds;
    std::uint32_t timeout_ms = 5000;
    KeygenShape shape;

    auto* keygen = app.add_subcommand("keygen", "generate a key pair and write PREFIX.pub / PREFIX.key");
    keygen->add_option("--scheme", scheme_name, "graph-iso, subgraph-iso, coloring, or modexp")
        ->required();
    keygen->add_option("--out", out_prefix, "output path prefix")->required();
    keygen->add_option("--n", shape.n, "graph size (scheme-specific default)");
    keygen->add_option("--host-n", shape.host_n, "subgraph-iso host size (default: twice --n)");
    keygen->add_option("--k", shape.k, "coloring colour count (default 3)");
    keygen->add_option("--p", shape.p, "modexp prime modulus (default 1009)");
    keygen->add_option("--seed", seed, "RNG seed (default: random)");
    keygen->callback([&] {
        Rng rng(seed);
        auto contract = generate_keypair(scheme_from_string(scheme_name), shape, rng);
        save_key_files(out_prefix, *contract);
        std::cout << "wrote " << out_prefix << ".pub\n";
        std::cout << "wrote " << out_prefix << ".key" << std::endl;
    });

    auto* prove = app.add_subcommand("prove", "authenticate against a listening verifier");
    prove->add_option("--key", key_path, "private key file")->required();
    prove->add_option("--verifier", verifier_addr, "verifier address, HOST:PORT")->required();
    prove->add_option("--rounds", rounds, "protocol rounds")->check(CLI::PositiveNumber);
    prove->add_option("--timeout", timeout_ms, "socket timeout, ms");
    prove->add_option("--seed", seed, "RNG seed (default: random)");
    prove->callback([&] {
        LoadedKey key = load_private(key_path);
        HostPort addr = parse_host_port(verifier_addr);
        TcpStream stream = connect_tcp(addr.host, addr.port, timeout_ms);
        Rng rng(seed);
        SessionConfig config{key.scheme, rounds, timeout_ms};
        bool accepted = prover_endpoint(stream, *key.contract, config, rng);
        std::cout << (accepted ? "accepted" : "rejected") << std::endl;
        rc = accepted ? 0 : 1;
    });

    std::uint16_t listen_port = 0;
    bool serve = false;
    auto* verify = app.add_subcommand("verify", "listen for a prover and issue a verdict");
    verify->add_option("--pub", pub_path, "public key file to pin")->required();
    verify->add_option("--listen", listen_port, "TCP port (0: ephemeral)");
    verify->add_option("--rounds", rounds, "protocol rounds")->check(CLI::PositiveNumber);
    verify->add_option("--timeout", timeout_ms, "socket timeout, ms");
    verify->add_flag("--serve", serve, "keep answering sessions instead of exiting after one");
    verify->add_option("--seed", seed, "RNG seed (default: random)");
    verify->callback([&] {
        LoadedKey pub = load_key_file(pub_path);
        TcpListener listener(listen_port);
        // Announce the bound port before the first accept so callers can
        // connect to an ephemeral listener.
        std::cout << "listening on " << listener.port() << std::endl;
        Rng rng(seed);
        SessionConfig config{pub.scheme, rounds, timeout_ms};
        if (!serve) {
            TcpStream stream = listener.accept(60'000);
            rc = run_verifier_session(stream, pub, config, rng);
            return;
        }
        for (;;) {
            try {
                TcpStream stream = listener.accept(60'000);
                Rng session_rng(rng.next_u64());
                run_verifier_session(stream, pub, config, session_rng);
            } catch (const Timeout&) {
                continue;
            } catch (const Error& e) {
                std::cerr << "session error: " << e.what() << std::endl;
            }
        }
    });

    auto* session = app.add_subcommand("session", "run prover and verifier in-process over loopback");
    session->add_option("--key", key_path, "private key file")->required();
    session->add_option("--rounds", rounds, "protocol rounds")->check(CLI::PositiveNumber);
    session->add_option("--seed", seed, "RNG seed (default: random)");
    session->callback([&] {
        LoadedKey key = load_private(key_path);
        LoopbackPair pair;
        SessionConfig config{key.scheme, rounds, timeout_ms};
        Rng prover_rng(seed), verifier_rng(seed ^ 0x9E3779B97F4A7C15ull);
        std::exception_ptr prover_error;
        std::thread prover([&] {
            try {
                prover_endpoint(pair.a(), *key.contract, config, prover_rng);
            } catch (...) {
                prover_error = std::current_exception();
                pair.a().close();
            }
        });
        bool accepted = false;
        try {
            accepted = verifier_endpoint(pair.b(), make_verifier_contract,
                                         key.contract->statement_bytes(), config, verifier_rng);
        } catch (...) {
            pair.b().close();
            prover.join();
            throw;
        }
        prover.join();
        if (prover_error) std::rethrow_exception(prover_error);
        std::cout << to_string(key.scheme) << ", " << rounds << " rounds: "
                  << (accepted ? "accepted" : "rejected") << std::endl;
        rc = accepted ? 0 : 1;
    });

    std::uint64_t trials = 1000;
    bool as_json = false;
    auto* attack = app.add_subcommand("attack",
                                      "measure the forgery rate of a prover without the witness");
    attack->add_option("--pub", pub_path, "public key file (a .key works too; only the statement is used)")
        ->required();
    attack->add_option("--rounds", rounds, "rounds per forged session")->check(CLI::PositiveNumber);
    attack->add_option("--trials", trials, "number of forged sessions")->check(CLI::PositiveNumber);
    attack->add_flag("--json", as_json, "print the report as JSON");
    attack->add_option("--seed", seed, "RNG seed (default: random)");
    attack->callback([&] {
        LoadedKey pub = load_key_file(pub_path);
        auto statement_only = make_verifier_contract(pub.scheme, pub.contract->statement_bytes());
        Rng rng(seed);
        ForgeryReport report = measure_forgery_rate(*statement_only, rounds, trials, rng);
        std::cout << (as_json ? report.to_json() : report.summary()) << std::endl;
    });

    int challenge_bit = 0;
    auto* simulate = app.add_subcommand("simulate",
                                        "produce an accepting round for a chosen challenge, no witness");
    simulate->add_option("--pub", pub_path, "public key file")->required();
    simulate->add_option("--challenge", challenge_bit, "challenge bit the round must answer")
        ->required()
        ->check(CLI::Range(0, 1));
    simulate->add_option("--seed", seed, "RNG seed (default: random)");
    simulate->callback([&] {
        LoadedKey pub = load_key_file(pub_path);
        Rng rng(seed);
        RoundRecord round = simulate_transcript(
            *pub.contract, Challenge{static_cast<std::uint8_t>(challenge_bit)}, rng);
        std::cout << "commitment: " << to_hex(round.commitment) << '\n';
        std::cout << "response:   " << to_hex(round.response) << '\n';
        bool ok = pub.contract->verify_round(round.commitment, round.challenge, round.response);
        std::cout << "verifies:   " << (ok ? "yes" : "no") << std::endl;
        rc = ok ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const WireError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    } catch (const PayloadTooLarge& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    } catch (const ProtocolViolation& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    } catch (const Timeout& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    } catch (const TransportClosed& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    } catch (const StatementMismatch& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return rc;
}
