#include "zka/keyfile.hpp"

#include <ctime>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zka/scheme_coloring.hpp"
#include "zka/scheme_graph_iso.hpp"
#include "zka/scheme_modexp.hpp"
#include "zka/scheme_subgraph_iso.hpp"

namespace zka {

namespace {

using nlohmann::json;

constexpr int kEnvelopeVersion = 1;

std::string now_iso8601() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string b64_field(const Bytes& data) { return base64_encode(data); }

Bytes b64_load(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string()) {
        throw KeyFileError(std::string("missing or non-string field: ") + field);
    }
    try {
        return base64_decode(j[field].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw KeyFileError(std::string(field) + ": " + e.what());
    }
}

BigInt decimal_load(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string()) {
        throw KeyFileError(std::string("missing or non-string field: ") + field);
    }
    const std::string text = j[field].get<std::string>();
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw KeyFileError(std::string(field) + ": not a decimal integer");
    }
    return BigInt(text);
}

std::vector<std::uint32_t> u32_list_load(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array()) {
        throw KeyFileError(std::string("missing or non-array field: ") + field);
    }
    std::vector<std::uint32_t> out;
    for (const auto& v : j[field]) {
        if (!v.is_number_unsigned()) throw KeyFileError(std::string(field) + ": non-integer entry");
        out.push_back(v.get<std::uint32_t>());
    }
    return out;
}

/// Graphs and permutations travel base64-packed; index and color lists stay
/// plain JSON arrays so key files diff readably.
json public_section(const SchemeContract& scheme) {
    const Bytes statement = scheme.statement_bytes();
    switch (scheme.id()) {
        case SchemeId::GraphIso: {
            auto st = graph_iso::Statement::deserialize(statement);
            return {{"gamma", b64_field(st.gamma.serialize())},
                    {"gamma1", b64_field(st.gamma1.serialize())}};
        }
        case SchemeId::SubgraphIso: {
            auto st = subgraph_iso::Statement::deserialize(statement);
            return {{"gamma", b64_field(st.gamma.serialize())},
                    {"lambda1", b64_field(st.lambda1.serialize())}};
        }
        case SchemeId::Coloring: {
            auto st = coloring::Statement::deserialize(statement);
            return {{"gamma", b64_field(st.gamma.serialize())}, {"k", st.k}};
        }
        case SchemeId::ModExp: {
            auto st = modexp::Statement::deserialize(statement);
            return {{"p", st.p.str()}, {"x", st.x.str()}, {"u", st.u.str()}};
        }
    }
    throw BadParameters("unknown scheme id");
}

json secret_section(const SchemeContract& scheme) {
    const Bytes witness = scheme.witness_bytes();
    switch (scheme.id()) {
        case SchemeId::GraphIso:
            return {{"phi", b64_field(witness)}};
        case SchemeId::SubgraphIso: {
            auto w = subgraph_iso::Witness::deserialize(witness);
            return {{"embedding", w.embedding}, {"phi", b64_field(w.phi.serialize())}};
        }
        case SchemeId::Coloring: {
            auto st = coloring::Statement::deserialize(scheme.statement_bytes());
            Coloring col = Coloring::deserialize(witness, st.k);
            return {{"colors", col.colors}};
        }
        case SchemeId::ModExp:
            return {{"s", bigint_from_bytes(witness).str()}};
    }
    throw BadParameters("unknown scheme id");
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw KeyFileError("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw KeyFileError("write failed: " + path);
}

std::unique_ptr<SchemeContract> rebuild(SchemeId id, const json& pub, const json* secret) {
    switch (id) {
        case SchemeId::GraphIso: {
            graph_iso::Statement st;
            st.gamma = Graph::deserialize(b64_load(pub, "gamma"));
            st.gamma1 = Graph::deserialize(b64_load(pub, "gamma1"));
            if (!secret) return std::make_unique<graph_iso::Scheme>(std::move(st));
            graph_iso::KeyPair kp{std::move(st), Permutation::deserialize(b64_load(*secret, "phi"))};
            return std::make_unique<graph_iso::Scheme>(std::move(kp));
        }
        case SchemeId::SubgraphIso: {
            subgraph_iso::Statement st;
            st.gamma = Graph::deserialize(b64_load(pub, "gamma"));
            st.lambda1 = Graph::deserialize(b64_load(pub, "lambda1"));
            if (!secret) return std::make_unique<subgraph_iso::Scheme>(std::move(st));
            subgraph_iso::Witness w;
            w.embedding = u32_list_load(*secret, "embedding");
            w.phi = Permutation::deserialize(b64_load(*secret, "phi"));
            subgraph_iso::KeyPair kp{std::move(st), std::move(w)};
            return std::make_unique<subgraph_iso::Scheme>(std::move(kp));
        }
        case SchemeId::Coloring: {
            coloring::Statement st;
            st.gamma = Graph::deserialize(b64_load(pub, "gamma"));
            if (!pub.contains("k") || !pub["k"].is_number_unsigned()) {
                throw KeyFileError("missing or non-integer field: k");
            }
            st.k = pub["k"].get<std::uint16_t>();
            if (!secret) return std::make_unique<coloring::Scheme>(std::move(st));
            Coloring col;
            col.k = st.k;
            for (std::uint32_t c : u32_list_load(*secret, "colors")) {
                if (c > 0xffff) throw KeyFileError("colors: entry out of range");
                col.colors.push_back(static_cast<std::uint16_t>(c));
            }
            coloring::KeyPair kp{std::move(st), std::move(col)};
            return std::make_unique<coloring::Scheme>(std::move(kp));
        }
        case SchemeId::ModExp: {
            modexp::Statement st;
            st.p = decimal_load(pub, "p");
            st.x = decimal_load(pub, "x");
            st.u = decimal_load(pub, "u");
            if (!secret) return std::make_unique<modexp::Scheme>(std::move(st));
            modexp::KeyPair kp{std::move(st), decimal_load(*secret, "s")};
            return std::make_unique<modexp::Scheme>(std::move(kp));
        }
    }
    throw KeyFileError("unknown scheme id");
}

}  // namespace

void save_key_files(const std::string& prefix, const SchemeContract& scheme) {
    if (!scheme.has_witness() || !scheme.witness_valid()) {
        throw InvalidKeyPair("refusing to save a key pair whose witness does not prove it");
    }
    json envelope{
        {"version", kEnvelopeVersion},
        {"scheme", to_string(scheme.id())},
        {"created", now_iso8601()},
        {"public", public_section(scheme)},
    };
    write_file(prefix + ".pub", envelope);
    envelope["secret"] = secret_section(scheme);
    write_file(prefix + ".key", envelope);
}

LoadedKey load_key_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw KeyFileError("cannot open: " + path);
    json envelope;
    try {
        in >> envelope;
    } catch (const json::exception& e) {
        throw KeyFileError(path + ": " + e.what());
    }
    if (!envelope.is_object() || !envelope.contains("version") ||
        !envelope["version"].is_number_integer() ||
        envelope["version"].get<int>() != kEnvelopeVersion) {
        throw KeyFileError(path + ": unsupported envelope version");
    }
    if (!envelope.contains("scheme") || !envelope["scheme"].is_string() ||
        !envelope.contains("public") || !envelope["public"].is_object()) {
        throw KeyFileError(path + ": malformed envelope");
    }

    LoadedKey loaded;
    try {
        loaded.scheme = scheme_from_string(envelope["scheme"].get<std::string>());
    } catch (const Error& e) {
        throw KeyFileError(path + ": " + e.what());
    }
    loaded.has_secret = envelope.contains("secret");
    const json* secret = nullptr;
    if (loaded.has_secret) {
        if (!envelope["secret"].is_object()) throw KeyFileError(path + ": malformed secret section");
        secret = &envelope["secret"];
    }
    try {
        loaded.contract = rebuild(loaded.scheme, envelope["public"], secret);
    } catch (const KeyFileError&) {
        throw;
    } catch (const Error& e) {
        throw KeyFileError(path + ": " + e.what());
    }
    if (loaded.has_secret && !loaded.contract->witness_valid()) {
        throw InvalidKeyPair(path + ": witness does not prove the statement");
    }
    return loaded;
}

}  // namespace zka
