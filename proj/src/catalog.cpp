#include <iterator>
#include <stdexcept>

#include "cylcert/error.hpp"
#include "cylcert/instance_gen.hpp"

namespace cylcert {

namespace {

#include "catalog_sigma2xs1.inc"

NormalCoordinates coords(std::initializer_list<std::int64_t> v) { return NormalCoordinates(std::vector<std::int64_t>(v)); }

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> out;
    out.push_back({"sphere-1tet",
                   "tri 1\ntets 1\n"
                   "glue 0 0 0 3 3201\nglue 0 1 0 2 0213\nglue 0 2 0 1 0213\nglue 0 3 0 0 2310\n",
                   {{coords({1, 1, 1, 1, 0, 0, 0}), 2, 1, "vertex-linking sphere"},
                    {coords({2, 2, 2, 2, 0, 0, 0}), 4, 2, "two parallel vertex links"}}, {}});
    out.push_back({"figure-eight",
                   "tri 1\ntets 2\n"
                   "glue 0 0 1 0 0213\nglue 0 1 1 1 2103\nglue 0 2 1 3 1230\nglue 0 3 1 2 1302\n"
                   "glue 1 0 0 0 0213\nglue 1 1 0 1 2103\nglue 1 2 0 3 2031\nglue 1 3 0 2 3012\n",
                   {{coords({1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0}), 0, 1, "vertex-linking torus"},
                    {coords({3, 3, 3, 3, 0, 0, 0, 3, 3, 3, 3, 0, 0, 0}), 0, 3, "three parallel vertex links"}}, {}});
    out.push_back({"closed-2tet-a",
                   "tri 1\ntets 2\n"
                   "glue 0 0 0 1 1023\nglue 0 1 0 0 1023\nglue 0 2 1 0 1302\nglue 0 3 1 1 0321\n"
                   "glue 1 0 0 2 2031\nglue 1 1 0 3 0321\nglue 1 2 1 3 0132\nglue 1 3 1 2 0132\n",
                   {{coords({1, 1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0}), -2, 1, "genus-2 surface with quads"}}, {}});
    out.push_back({"closed-2tet-b",
                   "tri 1\ntets 2\n"
                   "glue 0 0 0 1 1230\nglue 0 1 0 0 3012\nglue 0 2 1 0 2103\nglue 0 3 1 1 0321\n"
                   "glue 1 0 0 2 2103\nglue 1 1 0 3 0321\nglue 1 2 1 3 1230\nglue 1 3 1 2 3012\n",
                   {{coords({0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 2, 0}), 0, 1,
                     "torus bounding a neighbourhood of a one-sided Klein bottle"}}, {}});
    out.push_back({"closed-2tet-c",
                   "tri 1\ntets 2\n"
                   "glue 0 0 0 1 1230\nglue 0 1 0 0 3012\nglue 0 2 1 0 3201\nglue 0 3 1 1 3201\n"
                   "glue 1 0 0 2 2310\nglue 1 1 0 3 2310\nglue 1 2 1 3 1230\nglue 1 3 1 2 3012\n",
                   {{coords({0, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0}), 0, 1, "torus with quads"}}, {}});
    CatalogEntry product{"sigma2xS1", kSigma2xS1, {}, {}};
    for (const auto& row : kSigma2xS1Pool) {
        product.pool.emplace_back(std::vector<std::int64_t>(std::begin(row) + 1, std::end(row)));
    }
    auto first_with_euler = [&](std::int64_t chi) {
        for (std::size_t i = 0; i < product.pool.size(); ++i)
            if (kSigma2xS1Pool[i][0] == chi) return product.pool[i];
        throw std::logic_error("catalog pool has no such surface");
    };
    product.surfaces.push_back({first_with_euler(-2), -2, 1, "vertex surface of genus two"});
    product.surfaces.push_back({first_with_euler(-4), -4, 1, "vertex surface of genus three"});
    out.push_back(std::move(product));
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog()) {
        if (e.name == name) return e;
    }
    throw Error(ErrorCode::SyntaxError, "no catalog entry named " + name);
}

}  // namespace cylcert
