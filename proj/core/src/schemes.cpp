#include "zka/schemes.hpp"

#include "zka/scheme_coloring.hpp"
#include "zka/scheme_graph_iso.hpp"
#include "zka/scheme_modexp.hpp"
#include "zka/scheme_subgraph_iso.hpp"

namespace zka {

std::unique_ptr<SchemeContract> make_verifier_contract(SchemeId id, ByteView statement) {
    switch (id) {
        case SchemeId::GraphIso:
            return std::make_unique<graph_iso::Scheme>(graph_iso::Statement::deserialize(statement));
        case SchemeId::SubgraphIso:
            return std::make_unique<subgraph_iso::Scheme>(
                subgraph_iso::Statement::deserialize(statement));
        case SchemeId::Coloring:
            return std::make_unique<coloring::Scheme>(coloring::Statement::deserialize(statement));
        case SchemeId::ModExp:
            return std::make_unique<modexp::Scheme>(modexp::Statement::deserialize(statement));
    }
    throw BadParameters("unknown scheme id");
}

}  // namespace zka
