#pragma once

// JSON and markdown renderings of chowkit results. JSON objects carry
// "schema": "chowkit/1"; keys are sorted and nothing time-dependent is
// emitted, so equal inputs give byte-identical output.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chowkit/chow_x.hpp"
#include "chowkit/chow_y.hpp"
#include "chowkit/identities.hpp"
#include "chowkit/verify.hpp"

namespace chowkit {

inline constexpr const char* kSchema = "chowkit/1";

/// {"tool": "chowkit", "version": ...}
nlohmann::json meta_json();

/// Integers that fit in a long become JSON numbers, larger ones strings.
nlohmann::json int_json(const Int& v);

nlohmann::json chow_y_json(const ChowY& c, const IndexReport& index, const ClosureReport& closure);
nlohmann::json chow_x_json(const ChowY& c, const AbelianGroupReport& groups, const std::optional<ChowXResult>& result);
nlohmann::json verify_json(const VerifyResult& r);
nlohmann::json identities_json(const IdentityReport& r);

/// Adds the schema and meta keys to a single result, or wraps several as
/// {"command", "results": [...]}.
nlohmann::json envelope(const std::string& command, std::vector<nlohmann::json> results);

std::string chow_y_markdown(const ChowY& c, const IndexReport& index);
std::string chow_x_markdown(const ChowY& c, const AbelianGroupReport& groups, const std::optional<ChowXResult>& result);
std::string verify_markdown(const VerifyResult& r);
std::string identities_markdown(const IdentityReport& r);

}  // namespace chowkit
