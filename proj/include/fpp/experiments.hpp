#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpp {

inline constexpr const char* kVersion = "0.1.0";

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Declarative description of one experiment: line-oriented key=value text
// with optional [section] lines (cosmetic; keys are global), '#' comments.
// Command-line flags land through set() and win over file values. Every run
// records the fully resolved table plus the code version in output headers.
class ExperimentConfig {
public:
    static ExperimentConfig from_file(const std::string& path);
    static ExperimentConfig from_text(const std::string& text,
                                      const std::string& origin = "<config>");

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    std::string get(const std::string& key, const std::string& fallback) const;
    std::string require(const std::string& key) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    double get_real(const std::string& key, double fallback) const;
    std::vector<double> get_reals(const std::string& key,
                                  const std::string& fallback) const;
    std::vector<std::int64_t> get_ints(const std::string& key,
                                       const std::string& fallback) const;

    std::string experiment() const { return get("experiment", ""); }
    std::uint64_t seed() const;
    int threads() const { return static_cast<int>(get_int("threads", 1)); }
    std::string out_dir() const { return get("out", "fpp-out"); }

    std::string resolved_text() const;  // canonical sorted key=value lines
    std::uint64_t hash() const;         // FNV-1a over resolved_text()

private:
    std::map<std::string, std::string> kv_;
};

// Executes the named experiment, writing CSV artifacts under out_dir().
// Throws ConfigError for bad configs, std::length_error when a resource cap
// is exceeded.
void run_experiment(const ExperimentConfig& cfg);

}  // namespace fpp
