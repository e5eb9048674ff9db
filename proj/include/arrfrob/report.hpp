#pragma once

#include <string>
#include <vector>

namespace arrfrob {

enum class CheckStatus { Pass, Fail, Skip, Error, Warn };

const char* to_string(CheckStatus s);

/// One verified identity or axiom instance.
struct CheckRecord {
    std::string name;      // stable dotted id, e.g. "axiom.unit"
    std::string mode;      // "exact" or "numeric"
    std::string sample;    // parameter point label, "-" when independent
    CheckStatus status = CheckStatus::Pass;
    std::string residual;  // canonical rational or decimal string
    std::string witness;   // failing indices / vanishing forms / detail
    double elapsed_ms = 0.0;
};

/// Order-independent collection of check records. Reports merge by
/// concatenation; emission sorts by (name, sample).
class VerificationReport {
public:
    void add(CheckRecord rec) { records_.push_back(std::move(rec)); }
    void pass(const std::string& name, const std::string& mode, const std::string& sample,
              const std::string& residual = "0", const std::string& witness = "");
    void fail(const std::string& name, const std::string& mode, const std::string& sample,
              const std::string& residual, const std::string& witness);
    void merge(const VerificationReport& o);

    const std::vector<CheckRecord>& records() const { return records_; }
    std::vector<CheckRecord> sorted_records() const;

    int count(CheckStatus s) const;
    bool all_passed() const { return count(CheckStatus::Fail) == 0 && count(CheckStatus::Error) == 0; }

private:
    std::vector<CheckRecord> records_;
};

}  // namespace arrfrob
