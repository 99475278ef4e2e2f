#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rieffel::harness {

inline constexpr int kReportSchema = 1;

/// One verified identity. `anchor` names the identity being checked.
struct Record {
    std::string name;
    std::string anchor;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

class Report {
public:
    explicit Report(std::string suite = {}) : suite_(std::move(suite)) {}

    /// pass iff |measured - expected| <= tolerance.
    void near(std::string name, std::string anchor, double measured, double expected, double tolerance);
    /// pass iff measured <= bound (expected is recorded as 0).
    void below(std::string name, std::string anchor, double measured, double bound);
    /// pass iff ok; measured 1/0.
    void holds(std::string name, std::string anchor, bool ok);
    /// A failure that prevented a check from running.
    void error(std::string name, std::string anchor, const std::string& what);

    void append(const Report& other);

    const std::string& suite() const noexcept { return suite_; }
    const std::vector<Record>& records() const noexcept { return records_; }
    const std::vector<std::string>& errors() const noexcept { return errors_; }
    int fail_count() const;
    bool ok() const { return fail_count() == 0; }

    /// Wall clock is only written when set (it breaks byte-identical output).
    void set_elapsed(double seconds) { elapsed_ = seconds; }

    void write_text(std::ostream& os) const;
    void write_kv(std::ostream& os) const;

private:
    std::string suite_;
    std::vector<Record> records_;
    std::vector<std::string> errors_;
    double elapsed_ = -1.0;
};

}  // namespace rieffel::harness
