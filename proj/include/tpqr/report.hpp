#pragma once

#include "tpqr/cusp.hpp"
#include "tpqr/hms.hpp"
#include "tpqr/picard.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tpqr::report {

// All report maps preserve insertion order so that repeated invocations are
// byte-identical; integers above 2^53-1 in magnitude are rendered as decimal
// strings.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tpqr-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

Json json_int(const Int& v);
Json json_rat(const Rat& v);
Json json_matrix(const IntMatrix& m);
Json json_chern(const ChernCharacter& ch);

Json envelope(const std::string& command, Json config, Json result);

Json build_report(const Triple& t, const std::string& side);

struct CheckOutcome {
    Json json;
    bool all_passed = false;
};
CheckOutcome check_report(const Triple& t, const std::string& suite);

Json mutate_report(const Triple& t, const std::vector<int>& word);
Json k0_report(const Triple& t);
Json dual_report(const std::vector<long>& entries);
Json triangle_report(const Triple& t);
Json classes_report(const Triple& t);

} // namespace tpqr::report
