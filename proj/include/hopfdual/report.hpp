#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfdual {

// Outcome of a verification run: one line per named check, witness data
// on failure. Overall status is the conjunction.
struct CheckItem {
    std::string name;
    bool pass = true;
    std::string witness;  // empty when passing
    double ms = 0.0;
};

struct Report {
    std::vector<CheckItem> checks;

    void add(std::string name, bool pass, std::string witness = "", double ms = 0.0) {
        checks.push_back({std::move(name), pass, std::move(witness), ms});
    }
    void merge(const Report& other, const std::string& prefix = "") {
        for (const CheckItem& c : other.checks)
            checks.push_back({prefix + c.name, c.pass, c.witness, c.ms});
    }
    bool ok() const {
        for (const CheckItem& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string first_failure() const {
        for (const CheckItem& c : checks)
            if (!c.pass) return c.name + (c.witness.empty() ? "" : ": " + c.witness);
        return "";
    }
    std::string summary() const {
        std::string out;
        for (const CheckItem& c : checks) {
            out += (c.pass ? "pass  " : "FAIL  ") + c.name;
            if (!c.pass && !c.witness.empty()) out += "  [" + c.witness + "]";
            out += "\n";
        }
        return out;
    }
};

struct VerificationError : std::runtime_error {
    Report report;
    explicit VerificationError(Report r)
        : std::runtime_error("verification failed: " + r.first_failure()),
          report(std::move(r)) {}
};

} // namespace hopfdual
