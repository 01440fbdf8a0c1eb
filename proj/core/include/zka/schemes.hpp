#pragma once

#include <memory>

#include "zka/sigma.hpp"

namespace zka {

/// Verify-only contract from a scheme id and a serialized statement, for
/// verifiers that learn the statement off the wire or from a public key file.
/// Throws MalformedValue when the bytes do not decode as a statement.
std::unique_ptr<SchemeContract> make_verifier_contract(SchemeId id, ByteView statement);

}  // namespace zka
