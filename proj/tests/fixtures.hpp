#pragma once

#include <string>

namespace fixtures {

inline const std::string sphere_1tet =
    "tri 1\ntets 1\n"
    "glue 0 0 0 3 3201\n"
    "glue 0 1 0 2 0213\n"
    "glue 0 2 0 1 0213\n"
    "glue 0 3 0 0 2310\n";

inline const std::string figure_eight =
    "tri 1\ntets 2\n"
    "glue 0 0 1 0 0213\n"
    "glue 0 1 1 1 2103\n"
    "glue 0 2 1 3 1230\n"
    "glue 0 3 1 2 1302\n"
    "glue 1 0 0 0 0213\n"
    "glue 1 1 0 1 2103\n"
    "glue 1 2 0 3 2031\n"
    "glue 1 3 0 2 3012\n";

inline const std::string single_bdry_tet =
    "tri 1\ntets 1\nbdry 0 0\nbdry 0 1\nbdry 0 2\nbdry 0 3\n";

}  // namespace fixtures
