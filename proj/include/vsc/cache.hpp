#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "vsc/rational.hpp"

namespace vsc {

// Memo table for virtual structure constants, keyed by the canonical
// serialization of the key. Optionally persisted to an append-safe disk
// file ("key\tvalue" lines); identical concurrent writes are idempotent.
class VscCache {
public:
    VscCache() = default;

    // Loads existing entries; a corrupt file is rebuilt from its valid
    // lines with a warning.
    void attach_disk(const std::string& path);

    std::optional<Rational> get(const std::string& key) const;
    void put(const std::string& key, const Rational& value);

    size_t size() const;
    void clear_disk();  // wipes the attached file and the memory table
    const std::string& disk_path() const { return path_; }

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, Rational> map_;
    std::string path_;  // empty when memory-only
};

}  // namespace vsc
