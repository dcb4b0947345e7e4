#include "pellrep/records.hpp"

#include <sstream>

namespace pellrep {

namespace {

json data_object(const std::vector<std::pair<std::string, std::string>>& kv) {
    json out = json::object();
    for (const auto& [key, value] : kv) out[key] = value;
    return out;
}

const char* branch_name(EvenBranch branch) {
    switch (branch) {
        case EvenBranch::digit_below_max: return "digit-below-max";
        case EvenBranch::max_digit_single: return "max-digit-single";
        case EvenBranch::max_digit_power: return "max-digit-power";
    }
    return "?";
}

// RFC-4180: quote fields containing commas, quotes or newlines.
std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

json pell_record(const PellPair& pair) {
    json record;
    record["kind"] = "pell";
    record["d"] = to_decimal(pair.d);
    record["n"] = pair.n;
    record["x"] = to_decimal(pair.x);
    record["y"] = to_decimal(pair.y);
    return record;
}

json repdigit_record(const Int& value, unsigned long base,
                     const std::optional<RepdigitForm>& form) {
    json record;
    record["kind"] = "repdigit";
    record["value"] = to_decimal(value);
    record["base"] = base;
    record["is_repdigit"] = form.has_value();
    if (form) {
        record["digit"] = form->digit;
        record["length"] = form->length;
    }
    return record;
}

namespace {

json hit_body(const SearchHit& hit) {
    json record;
    record["kind"] = "hit";
    record["d"] = to_decimal(hit.d);
    json entries = json::array();
    for (const HitEntry& entry : hit.hits) {
        json e;
        e["n"] = entry.n;
        e["a"] = entry.digit;
        e["m"] = entry.length;
        e["x"] = to_decimal(entry.x);
        entries.push_back(std::move(e));
    }
    record["hits"] = std::move(entries);
    record["odd"] = hit.odd_count;
    record["even"] = hit.even_count;
    record["trivial"] = hit.trivial;
    return record;
}

}  // namespace

json hit_record(const SearchHit& hit) { return hit_body(hit); }

json hit_record(const ClassifiedHit& classified) {
    json record = hit_body(classified.hit);
    json notes = json::array();
    for (const HitAnnotation& note : classified.annotations) {
        json n;
        n["n"] = note.n;
        n["parity"] = note.even ? "even" : "odd";
        if (note.branch) n["branch"] = branch_name(*note.branch);
        notes.push_back(std::move(n));
    }
    record["annotations"] = std::move(notes);
    if (classified.reduced) {
        const ReducedOddInstance& inst = *classified.reduced;
        json r;
        r["D"] = to_decimal(inst.big_d);
        r["a"] = inst.a;
        r["m"] = inst.m;
        r["c"] = inst.c;
        r["ell"] = inst.ell;
        r["n"] = inst.n;
        r["valuation_checked"] = classified.valuation_checked;
        record["reduced"] = std::move(r);
    }
    return record;
}

json verify_record(const std::string& suite, const CheckLine& line) {
    json record;
    record["kind"] = "verify";
    record["suite"] = suite;
    record["check"] = line.check;
    record["status"] = line.passed ? "pass" : "fail";
    record["cases"] = line.cases;
    if (!line.data.empty()) record["data"] = data_object(line.data);
    return record;
}

json verify_record(const std::string& suite, const Evidence& evidence) {
    json record;
    record["kind"] = "verify";
    record["suite"] = suite;
    record["check"] = evidence.check;
    record["status"] = "falsified";
    record["message"] = evidence.message;
    if (!evidence.data.empty()) record["data"] = data_object(evidence.data);
    return record;
}

json bound_record(const BoundReport& report) {
    json record;
    record["kind"] = "bound";
    record["base"] = report.base;
    record["n_max"] = to_decimal(report.n_max);
    record["ell_max"] = to_decimal(report.ell_max);
    record["m_max"] = to_decimal(report.m_max);
    record["n_max_derived"] = report.n_max_derived;
    json log_d;
    log_d["scale"] = "1000000000";  // nats * 10^9, rounded up
    log_d["value"] = to_decimal(report.log_d_bound_fp);
    record["log_d_bound"] = std::move(log_d);
    json te;
    te["mantissa"] = "1";
    te["base"] = to_decimal(report.theorem_exponent.base);
    te["exponent"] = to_decimal(report.theorem_exponent.exponent);
    record["theorem_exponent"] = std::move(te);
    return record;
}

std::string jsonl_line(const json& record) { return record.dump() + "\n"; }

std::string hits_csv(const std::vector<SearchHit>& hits) {
    std::ostringstream out;
    out << "d,n,a,m,x,odd,even,trivial\r\n";
    for (const SearchHit& hit : hits)
        for (const HitEntry& entry : hit.hits) {
            out << csv_field(to_decimal(hit.d)) << ',' << entry.n << ',' << entry.digit
                << ',' << entry.length << ',' << csv_field(to_decimal(entry.x)) << ','
                << hit.odd_count << ',' << hit.even_count << ','
                << (hit.trivial ? "true" : "false") << "\r\n";
        }
    return out.str();
}

}  // namespace pellrep
