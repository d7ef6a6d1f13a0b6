#include "vsc/cache.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace vsc {

void VscCache::attach_disk(const std::string& path) {
    std::lock_guard<std::mutex> lock(mu_);
    path_ = path;
    std::ifstream in(path);
    if (!in) return;  // cold cache
    std::string line;
    bool corrupt = false;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
            corrupt = true;
            continue;
        }
        try {
            Rational v = Rational::parse(line.substr(tab + 1));
            map_[line.substr(0, tab)] = std::move(v);
        } catch (const std::exception&) {
            corrupt = true;
        }
    }
    in.close();
    if (corrupt) {
        std::cerr << "warning: cache file '" << path << "' had corrupt lines; rebuilding\n";
        std::ofstream out(path, std::ios::trunc);
        for (const auto& [k, v] : map_) out << k << '\t' << v.str() << '\n';
    }
}

std::optional<Rational> VscCache::get(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void VscCache::put(const std::string& key, const Rational& value) {
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, fresh] = map_.emplace(key, value);
    if (!fresh) return;  // idempotent: identical values, keep the first
    if (!path_.empty()) {
        std::ofstream out(path_, std::ios::app);
        out << key << '\t' << value.str() << '\n';
    }
}

size_t VscCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

void VscCache::clear_disk() {
    std::lock_guard<std::mutex> lock(mu_);
    map_.clear();
    if (!path_.empty()) std::remove(path_.c_str());
}

}  // namespace vsc
