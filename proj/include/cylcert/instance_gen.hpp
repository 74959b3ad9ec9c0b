#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cylcert/normal_surface.hpp"
#include "cylcert/triangulation.hpp"

namespace cylcert {

struct KnownSurface {
    NormalCoordinates coords;
    std::int64_t euler;
    int components;
    std::string description;
};

struct CatalogEntry {
    std::string name;
    std::string triangulation;  // `tri 1` text
    std::vector<KnownSurface> surfaces;
    std::vector<NormalCoordinates> pool;  // vertex surfaces used by pool_combination
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

/// Seeded search over quad patterns solving the matching equations with
/// coordinates at most `coord_bound`. Throws SearchExhausted.
NormalCoordinates random_surface(const Triangulation& tri, std::uint64_t seed, std::int64_t coord_bound);

struct NormalComponent {
    NormalCoordinates coords;
    std::vector<int> faces;  // faces in the face complex of the whole surface
    std::int64_t euler;
};

/// Connected components of the surface `q`, in order of least face index.
std::vector<NormalComponent> surface_components(const Triangulation& tri, const NormalCoordinates& q);

/// Haken sum of up to `max_terms` random pairwise compatible pool surfaces with
/// multiplicities in [1, max_coeff]. Returns its connected components of
/// negative Euler characteristic, distinct, in order. Throws SearchExhausted on
/// an empty pool.
std::vector<NormalCoordinates> pool_combination(const Triangulation& tri, const std::vector<NormalCoordinates>& pool,
                                                std::uint64_t seed, int max_terms, std::int64_t max_coeff);

struct HighGenusResult {
    NormalCoordinates coords;            // the full Haken sum
    NormalCoordinates component_coords;  // the qualifying connected component
    std::vector<int> component_faces;    // its faces in the face complex of `coords`
    std::int64_t genus;
};

/// Haken sums of random surfaces until a connected component of genus at least
/// `target_genus` appears. Returns nullopt when the budget runs out.
std::optional<HighGenusResult> high_genus_search(const Triangulation& tri, std::int64_t target_genus, int budget,
                                                 std::uint64_t seed = 1);

/// Random closed orientable triangulation on `tet_count` tetrahedra (odd gluing permutations).
Triangulation random_triangulation(int tet_count, std::uint64_t seed);

}  // namespace cylcert
