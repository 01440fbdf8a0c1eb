#pragma once

#include <memory>
#include <string>

#include "zka/sigma.hpp"

namespace zka {

/// A key loaded from disk: a contract carrying the witness when the file was
/// a private key, the statement alone when it was public.
struct LoadedKey {
    SchemeId scheme;
    bool has_secret = false;
    std::unique_ptr<SchemeContract> contract;
};

/// Writes PREFIX.pub (statement only) and PREFIX.key (statement plus
/// witness) as JSON envelopes. The contract must hold a valid witness.
void save_key_files(const std::string& prefix, const SchemeContract& scheme);

/// Reads either kind of file. A private file whose witness does not prove its
/// statement throws InvalidKeyPair; structural problems throw KeyFileError.
LoadedKey load_key_file(const std::string& path);

}  // namespace zka
