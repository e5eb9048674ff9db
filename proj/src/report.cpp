#include "arrfrob/report.hpp"

#include <algorithm>

namespace arrfrob {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skip: return "SKIP";
        case CheckStatus::Error: return "ERROR";
        case CheckStatus::Warn: return "WARN";
    }
    return "?";
}

void VerificationReport::pass(const std::string& name, const std::string& mode,
                              const std::string& sample, const std::string& residual,
                              const std::string& witness) {
    add(CheckRecord{name, mode, sample, CheckStatus::Pass, residual, witness, 0.0});
}

void VerificationReport::fail(const std::string& name, const std::string& mode,
                              const std::string& sample, const std::string& residual,
                              const std::string& witness) {
    add(CheckRecord{name, mode, sample, CheckStatus::Fail, residual, witness, 0.0});
}

void VerificationReport::merge(const VerificationReport& o) {
    records_.insert(records_.end(), o.records_.begin(), o.records_.end());
}

std::vector<CheckRecord> VerificationReport::sorted_records() const {
    std::vector<CheckRecord> out = records_;
    std::stable_sort(out.begin(), out.end(), [](const CheckRecord& a, const CheckRecord& b) {
        if (a.name != b.name) return a.name < b.name;
        return a.sample < b.sample;
    });
    return out;
}

int VerificationReport::count(CheckStatus s) const {
    int c = 0;
    for (const auto& r : records_)
        if (r.status == s) ++c;
    return c;
}

}  // namespace arrfrob
