#include "berger/manifest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace berger {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void RunManifest::set(const std::string& key, const std::string& value) {
    if (key.find('=') != std::string::npos ||
        key.find('\n') != std::string::npos ||
        value.find('\n') != std::string::npos)
        throw std::invalid_argument("manifest keys/values must be single-line"
                                    " and keys must not contain '='");
    for (auto& [k, v] : items_)
        if (k == key) {
            v = value;
            return;
        }
    items_.emplace_back(key, value);
}

void RunManifest::set(const std::string& key, double value) {
    set(key, format_double(value));
}

void RunManifest::set(const std::string& key, long long value) {
    set(key, std::to_string(value));
}

std::optional<std::string> RunManifest::get(const std::string& key) const {
    for (const auto& [k, v] : items_)
        if (k == key) return v;
    return std::nullopt;
}

double RunManifest::get_double(const std::string& key) const {
    const auto s = get(key);
    if (!s) throw std::out_of_range("manifest key missing: " + key);
    double v{};
    const auto res = std::from_chars(s->data(), s->data() + s->size(), v);
    if (res.ec != std::errc{})
        throw std::invalid_argument("manifest value not a number: " + key);
    return v;
}

std::string RunManifest::get_string(const std::string& key) const {
    const auto s = get(key);
    if (!s) throw std::out_of_range("manifest key missing: " + key);
    return *s;
}

void RunManifest::write(std::ostream& os) const {
    for (const auto& [k, v] : items_) os << k << '=' << v << '\n';
}

std::string RunManifest::to_string() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

RunManifest RunManifest::parse(std::istream& is) {
    RunManifest m;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("malformed manifest line: " + line);
        m.items_.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
    return m;
}

RunManifest RunManifest::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open manifest: " + path);
    return parse(f);
}

void RunManifest::save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write manifest: " + path);
    write(f);
}

} // namespace berger
