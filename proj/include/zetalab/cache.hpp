#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "zetalab/zeta_combination.hpp"

namespace zetalab {

/// Append-only JSON-lines store of exact decompositions keyed by (coeffs, r, v).
///
/// One line per entry:
///   {"coeffs":["1","-2"],"r":2,"v":0,"zeta":{"3":"..."},"constant":"..."}
/// Appends hold an exclusive flock on the file. Malformed lines are skipped
/// and counted. Safe to share between threads.
class DecompositionCache {
public:
    explicit DecompositionCache(std::filesystem::path path);

    std::optional<ZetaCombination> lookup(const IntPolynomial& poly, int r, int v) const;
    void store(const IntPolynomial& poly, int r, int v, const ZetaCombination& combo);

    /// lookup, else compute with decompose and store.
    ZetaCombination get_or_compute(const IntPolynomial& poly, int r, int v);

    std::size_t size() const;
    std::size_t skipped_lines() const noexcept { return skipped_; }
    const std::filesystem::path& path() const noexcept { return path_; }

private:
    static std::string key(const IntPolynomial& poly, int r, int v);

    std::filesystem::path path_;
    mutable std::mutex mutex_;
    std::map<std::string, ZetaCombination> entries_;
    std::size_t skipped_ = 0;
};

}  // namespace zetalab
