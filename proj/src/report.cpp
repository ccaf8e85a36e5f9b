#include "srcy/report.hpp"

#include <json.hpp>

#include <sstream>

namespace srcy {

std::string status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Ingested: return "ingested";
    }
    return "fail";
}

CheckRecord& VerificationReport::compare(const std::string& id, const std::string& group, const std::string& expected,
                                         const std::string& computed, const std::string& provenance,
                                         const std::string& note)
{
    checks.push_back({id, group, expected, computed, expected == computed ? Status::Pass : Status::Fail, provenance, note});
    return checks.back();
}

CheckRecord& VerificationReport::ingest(const std::string& id, const std::string& group, const std::string& value,
                                        const std::string& provenance, const std::string& note)
{
    checks.push_back({id, group, value, value, Status::Ingested, provenance, note});
    return checks.back();
}

CheckRecord& VerificationReport::fail(const std::string& id, const std::string& group, const std::string& expected,
                                      const std::string& error, const std::string& provenance)
{
    checks.push_back({id, group, expected, "error: " + error, Status::Fail, provenance, {}});
    return checks.back();
}

std::size_t VerificationReport::count(Status s) const
{
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.status == s) ++n;
    return n;
}

std::string emit_json(const VerificationReport& r, int indent)
{
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json o;
        o["id"] = c.id;
        o["group"] = c.group;
        o["expected"] = c.expected;
        o["computed"] = c.computed;
        o["status"] = status_name(c.status);
        o["provenance"] = c.provenance;
        if (!c.note.empty()) o["note"] = c.note;
        j["checks"].push_back(o);
    }
    return j.dump(indent);
}

std::string emit_text(const VerificationReport& r)
{
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << (c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "INGESTED") << "  " << c.id
           << "  expected=" << c.expected << "  computed=" << c.computed;
        if (!c.note.empty()) os << "  [" << c.note << "]";
        os << "\n";
    }
    os << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, " << r.count(Status::Ingested)
       << " ingested\n";
    return os.str();
}

} // namespace srcy
