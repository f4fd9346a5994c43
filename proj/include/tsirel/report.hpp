#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace tsirel {

enum class Status { pass, fail, not_applicable };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "not-applicable";
    }
}

struct CaseResult {
    std::string id;
    Status status = Status::pass;
    std::string detail; // witness / margin; required on fail
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;

    void add(std::string id, bool ok, std::string detail = "") {
        cases.push_back({std::move(id), ok ? Status::pass : Status::fail, std::move(detail)});
    }
    void add_na(std::string id, std::string detail) {
        cases.push_back({std::move(id), Status::not_applicable, std::move(detail)});
    }
    void absorb(const VerificationReport& other) {
        for (auto& c : other.cases) {
            CaseResult cc = c;
            cc.id = other.suite.empty() ? cc.id : other.suite + "/" + cc.id;
            cases.push_back(std::move(cc));
        }
    }

    int passed() const { return count(Status::pass); }
    int failed() const { return count(Status::fail); }
    int skipped() const { return count(Status::not_applicable); }
    bool ok() const { return failed() == 0; }

    std::string to_text() const {
        std::ostringstream os;
        os << "suite " << suite << "\n";
        for (auto& c : cases) {
            os << "  [" << status_name(c.status) << "] " << c.id;
            if (!c.detail.empty()) os << " -- " << c.detail;
            os << "\n";
        }
        os << "  summary: " << passed() << " pass, " << failed() << " fail, "
           << skipped() << " not-applicable\n";
        return os.str();
    }

private:
    int count(Status s) const {
        int k = 0;
        for (auto& c : cases)
            if (c.status == s) ++k;
        return k;
    }
};

} // namespace tsirel
