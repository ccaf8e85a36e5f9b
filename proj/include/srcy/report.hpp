#pragma once

#include <string>
#include <vector>

namespace srcy {

enum class Status { Pass, Fail, Ingested };

std::string status_name(Status s);

struct CheckRecord {
    std::string id;
    std::string group;
    std::string expected;
    std::string computed;
    Status status = Status::Fail;
    std::string provenance; // fixture the expected value is read from or checked against
    std::string note;
};

struct VerificationReport {
    std::vector<CheckRecord> checks;

    // pass iff expected == computed
    CheckRecord& compare(const std::string& id, const std::string& group, const std::string& expected,
                         const std::string& computed, const std::string& provenance, const std::string& note = {});
    CheckRecord& ingest(const std::string& id, const std::string& group, const std::string& value,
                        const std::string& provenance, const std::string& note = {});
    CheckRecord& fail(const std::string& id, const std::string& group, const std::string& expected,
                      const std::string& error, const std::string& provenance);

    std::size_t count(Status s) const;
    bool any_fail() const { return count(Status::Fail) > 0; }
};

// {"version":1,"checks":[...]} with fields in declaration order
std::string emit_json(const VerificationReport& r, int indent = -1);
std::string emit_text(const VerificationReport& r);

} // namespace srcy
