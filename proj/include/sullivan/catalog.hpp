#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sullivan/models.hpp"

namespace sullivan {

/// A standard subgroup inclusion, given by its restriction on classifying-space cohomology.
/// Target variables are u1, u2, ... of the target group.
struct CatalogEmbedding {
    std::string name;  // "<source>><label>", e.g. "SU(2)>T1"
    std::string source;
    std::string target;
    std::map<std::string, std::string> map;
    std::string description;
};

struct CatalogEntry {
    GroupData group;
    std::vector<CatalogEmbedding> embeddings;
};

/// Resolves "SU(n)", "Sp(n)", "SO(3)", "SO(4)", "G2", "T<n>"/"T^n", "S1", "U(1)", "{e}", "Z<k>"
/// and powers "X^k" (also "X^k" written without parentheses, e.g. "SU2^3").
GroupData catalog_group(std::string_view name);

/// Resolves an embedding name "<group>><label>". Labels: T<k> (maximal or coordinate torus),
/// diag-SU(2), diag-T1, SU(2) (block), SU(3) (G2 only), SO(4) (G2 only).
CatalogEmbedding catalog_embedding(std::string_view name);

/// Canonical spelling of a group name, e.g. "SU2^2" -> "SU(2)^2".
std::string canonical_group_name(std::string_view name);

std::vector<CatalogEntry> catalog_list();
CatalogEntry catalog_show(std::string_view name);

}  // namespace sullivan
