#pragma once

#include <string>
#include <vector>

namespace cylcert::cert_consts {

inline constexpr const char* format = "cylcert-certificate-1";
inline constexpr const char* parity_rule =
    "least-index red end is followed by yellow; vertex disks swap yellow and blue when |V+| > |V-|";
inline constexpr const char* positive_side = "coorientation +1 points toward increasing family index";

inline std::vector<std::string> verified_facts() {
    return {
        "X is a pair of pants of one non-red colour",
        "every boundary curve of X is essential in F",
        "Opp is total, injective and cellular on X",
        "X and Opp(X) are disjoint and differently coloured",
        "each Opp(alpha) is an embedded curve disjoint from the boundary of X",
        "the selected alpha and Opp(alpha) are disjoint essential curves in F",
        "the selected alpha and Opp(alpha) cobound no annulus in F disjoint from X",
    };
}

}  // namespace cylcert::cert_consts
