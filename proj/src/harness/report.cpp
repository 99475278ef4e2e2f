#include "rieffel/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace rieffel::harness {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

}  // namespace

void Report::near(std::string name, std::string anchor, double measured, double expected, double tolerance) {
    const bool pass = std::abs(measured - expected) <= tolerance;
    records_.push_back({std::move(name), std::move(anchor), measured, expected, tolerance, pass});
}

void Report::below(std::string name, std::string anchor, double measured, double bound) {
    const bool pass = measured <= bound;
    records_.push_back({std::move(name), std::move(anchor), measured, 0.0, bound, pass});
}

void Report::holds(std::string name, std::string anchor, bool ok) {
    records_.push_back({std::move(name), std::move(anchor), ok ? 1.0 : 0.0, 1.0, 0.0, ok});
}

void Report::error(std::string name, std::string anchor, const std::string& what) {
    errors_.push_back(name + ": " + what);
    records_.push_back({std::move(name), std::move(anchor), std::nan(""), 0.0, 0.0, false});
}

void Report::append(const Report& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
    errors_.insert(errors_.end(), other.errors_.begin(), other.errors_.end());
}

int Report::fail_count() const {
    int n = 0;
    for (const auto& r : records_) n += !r.pass;
    return n;
}

void Report::write_text(std::ostream& os) const {
    os << "suite " << suite_ << "\n";
    for (const auto& r : records_) {
        os << (r.pass ? "  PASS " : "  FAIL ") << r.name << "  [" << r.anchor << "]  measured " << num(r.measured)
           << "  expected " << num(r.expected) << "  tol " << num(r.tolerance) << "\n";
    }
    for (const auto& e : errors_) os << "  error: " << e << "\n";
    os << "passed " << records_.size() - fail_count() << " of " << records_.size() << ", failed " << fail_count() << "\n";
    if (elapsed_ >= 0) os << "elapsed " << num(elapsed_) << " s\n";
}

void Report::write_kv(std::ostream& os) const {
    os << "schema=" << kReportSchema << "\n";
    os << "suite=" << suite_ << "\n";
    for (std::size_t k = 0; k < records_.size(); ++k) {
        const auto& r = records_[k];
        const std::string p = "record." + std::to_string(k) + ".";
        os << p << "name=" << r.name << "\n"
           << p << "anchor=" << r.anchor << "\n"
           << p << "measured=" << num(r.measured) << "\n"
           << p << "expected=" << num(r.expected) << "\n"
           << p << "tolerance=" << num(r.tolerance) << "\n"
           << p << "pass=" << (r.pass ? 1 : 0) << "\n";
    }
    for (std::size_t k = 0; k < errors_.size(); ++k) os << "error." << k << "=" << errors_[k] << "\n";
    os << "total=" << records_.size() << "\n";
    os << "failed=" << fail_count() << "\n";
    if (elapsed_ >= 0) os << "elapsed=" << num(elapsed_) << "\n";
}

}  // namespace rieffel::harness
