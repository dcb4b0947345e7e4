#pragma once

#include <string>

#include <json.hpp>

#include "pellrep/bounds.hpp"
#include "pellrep/pell.hpp"
#include "pellrep/repdigit.hpp"
#include "pellrep/search.hpp"
#include "pellrep/verify.hpp"

namespace pellrep {

using json = nlohmann::ordered_json;

// One record per line, keys in a fixed order, every big integer a
// decimal string. Record kinds: pell, repdigit, hit, verify, bound.

json pell_record(const PellPair& pair);
json repdigit_record(const Int& value, unsigned long base,
                     const std::optional<RepdigitForm>& form);
json hit_record(const SearchHit& hit);
json hit_record(const ClassifiedHit& classified);
json verify_record(const std::string& suite, const CheckLine& line);
json verify_record(const std::string& suite, const Evidence& evidence);
json bound_record(const BoundReport& report);

/// Serializes one record as a JSONL line (LF-terminated, UTF-8).
std::string jsonl_line(const json& record);

/// RFC-4180-style CSV for flat hit records (one row per hit entry),
/// with a header row.
std::string hits_csv(const std::vector<SearchHit>& hits);

}  // namespace pellrep
