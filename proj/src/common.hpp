#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xalg {

// Failure raised by constructors and resolution. `rc` classifies the failure
// the way the CLI reports it: 1 = axiom/check failure, 2 = input error.
class Error : public std::runtime_error {
public:
    Error(std::string tag, const std::string& message, std::vector<int> witness = {}, int rc = 1)
        : std::runtime_error(message),
          tag_(std::move(tag)),
          witness_(std::move(witness)),
          rc_(rc) {}

    const std::string& tag() const { return tag_; }
    const std::vector<int>& witness() const { return witness_; }
    int rc() const { return rc_; }

private:
    std::string tag_;
    std::vector<int> witness_;
    int rc_;
};

Error input_error(const std::string& tag, const std::string& message);
Error internal_error(const std::string& message);

// Outcome of an exhaustive axiom scan. Checkers stop at the first violated
// axiom in lexicographic scan order; `checks` counts verifications performed
// up to that point, so reruns on identical input reproduce the same witness.
struct CheckReport {
    bool ok = true;
    std::string tag;
    std::vector<int> witness;
    long long checks = 0;

    CheckReport& fail(std::string t, std::vector<int> w) {
        ok = false;
        tag = std::move(t);
        witness = std::move(w);
        return *this;
    }

    // Folds a sub-check into this report. Returns false if the sub-check
    // failed (the failure, with `prefix` prepended to its tag, is recorded).
    bool absorb(const CheckReport& sub, const std::string& prefix = "") {
        checks += sub.checks;
        if (!sub.ok && ok) {
            ok = false;
            tag = prefix + sub.tag;
            witness = sub.witness;
        }
        return sub.ok;
    }

    explicit operator bool() const { return ok; }
};

std::string witness_string(const std::vector<int>& w);

// Largest group order accepted by validators and product constructions.
// Overridable through the XALG_SIZE_LIMIT environment variable.
int size_limit();

// Keeps size_limit() at or above `floor` while alive. The built-in catalog
// is fixed-size and must construct even under a lowered environment bound.
class SizeLimitFloor {
public:
    explicit SizeLimitFloor(int floor);
    ~SizeLimitFloor();
    SizeLimitFloor(const SizeLimitFloor&) = delete;
    SizeLimitFloor& operator=(const SizeLimitFloor&) = delete;

private:
    int previous_;
};

// Carrier bound for the brute-force enumerators.
constexpr int kOracleLimit = 8;

}  // namespace xalg
