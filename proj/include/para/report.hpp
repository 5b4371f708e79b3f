#pragma once

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace para {

struct CheckRecord {
    std::string id;
    bool pass;
    std::string witness;  // canonical text of the failing residue, empty on pass
};

/// Outcome of one verification suite: per-instance records in deterministic
/// order plus summary counts.
class Report {
  public:
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    void add(std::string id, bool pass, std::string witness = "") {
        records_.push_back({std::move(id), pass, std::move(witness)});
        (pass ? passed_ : failed_)++;
    }
    void absorb(const Report& other) {
        for (const auto& r : other.records_) {
            records_.push_back(r);
            (r.pass ? passed_ : failed_)++;
        }
    }

    const std::string& suite() const { return suite_; }
    const std::vector<CheckRecord>& records() const { return records_; }
    std::size_t passed() const { return passed_; }
    std::size_t failed() const { return failed_; }
    bool all_passed() const { return failed_ == 0; }

    void set_elapsed_ms(double ms) { elapsed_ms_ = ms; }
    double elapsed_ms() const { return elapsed_ms_; }

    /// Human-readable rendering; failures always show their witness so a
    /// bad identity can be re-checked by hand.
    void render(std::ostream& os, bool verbose = false) const {
        os << "suite " << suite_ << ": " << passed_ << " passed, " << failed_
           << " failed";
        if (elapsed_ms_ > 0) os << " (" << elapsed_ms_ << " ms)";
        os << "\n";
        for (const auto& r : records_) {
            if (r.pass && !verbose) continue;
            os << "  [" << (r.pass ? "PASS" : "FAIL") << "] " << r.id;
            if (!r.pass && !r.witness.empty()) os << "  residue: " << r.witness;
            os << "\n";
        }
    }

  private:
    std::string suite_;
    std::vector<CheckRecord> records_;
    std::size_t passed_ = 0;
    std::size_t failed_ = 0;
    double elapsed_ms_ = 0;
};

/// Worker count for suite-internal parallelism; PARALGEBRA_THREADS caps it.
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("PARALGEBRA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

/// Runs fn(i) for i in [0, count) across workers; results land in a
/// pre-sized vector so record order stays deterministic.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, Fn&& fn) {
    std::vector<Result> results(count);
    unsigned workers = worker_count();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::vector<std::thread> pool;
    std::size_t stride = (count + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        std::size_t lo = t * stride;
        std::size_t hi = std::min(count, lo + stride);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) results[i] = fn(i);
        });
    }
    for (auto& th : pool) th.join();
    return results;
}

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace para
