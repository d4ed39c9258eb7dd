#pragma once

// Flat key-value run manifests ("key=value" lines, nesting via dotted
// keys).  Values are stored as exact strings so a write/parse cycle is
// lossless; doubles go through shortest round-trip formatting.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace berger {

// shortest decimal representation of a binary64 that parses back exactly
std::string format_double(double v);

class RunManifest {
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);
    void set(const std::string& key, long long value);

    std::optional<std::string> get(const std::string& key) const;
    double get_double(const std::string& key) const; // throws if missing
    std::string get_string(const std::string& key) const;

    const std::vector<std::pair<std::string, std::string>>& items() const {
        return items_;
    }

    void write(std::ostream& os) const;
    std::string to_string() const;
    static RunManifest parse(std::istream& is);
    static RunManifest load(const std::string& path);
    void save(const std::string& path) const;

private:
    std::vector<std::pair<std::string, std::string>> items_;
};

} // namespace berger
