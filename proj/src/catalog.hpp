#ifndef LZB_CATALOG_HPP
#define LZB_CATALOG_HPP

#include <string>
#include <vector>

#include "format.hpp"

namespace lzb {

// One value claimed by the source classification/tables for this entry,
// shipped verbatim next to what the library computes.  `disputed` marks the
// entries where exact recomputation disagrees with the printed value; the
// catalog never silently corrects or silently adopts either side.
struct CatalogClaim {
    std::string key;          // "z_lie", "k_lie", "stem", "eps", ...
    std::string claimed;      // value as printed in the source
    bool disputed = false;
    std::string note;         // what the computation yields instead
};

struct CatalogEntry {
    std::string name;
    std::string description;
    std::string text;  // algebra file source
    std::vector<CatalogClaim> claims;

    AlgebraFile file() const { return parse_algebra_file(text); }
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);

}  // namespace lzb

#endif
