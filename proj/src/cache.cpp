#include "zetalab/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "zetalab/serialize.hpp"
#include "zetalab/zeta_decomposition.hpp"

namespace zetalab {

namespace {

class LockedAppend {
public:
    explicit LockedAppend(const std::filesystem::path& path) {
        fd_ = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
        if (fd_ < 0) throw std::runtime_error("cannot open cache '" + path.string() + "': " + std::strerror(errno));
        if (::flock(fd_, LOCK_EX) != 0) {
            ::close(fd_);
            throw std::runtime_error("cannot lock cache '" + path.string() + "'");
        }
    }
    ~LockedAppend() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    LockedAppend(const LockedAppend&) = delete;
    LockedAppend& operator=(const LockedAppend&) = delete;

    void write_line(const std::string& line) {
        std::string buf = line + '\n';
        const char* p = buf.data();
        std::size_t left = buf.size();
        while (left > 0) {
            ssize_t n = ::write(fd_, p, left);
            if (n < 0) {
                if (errno == EINTR) continue;
                throw std::runtime_error(std::string("cache write failed: ") + std::strerror(errno));
            }
            p += n;
            left -= static_cast<std::size_t>(n);
        }
    }

private:
    int fd_ = -1;
};

}  // namespace

std::string DecompositionCache::key(const IntPolynomial& poly, int r, int v) {
    return to_json(poly).dump() + "|" + std::to_string(r) + "|" + std::to_string(v);
}

DecompositionCache::DecompositionCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            const IntPolynomial poly = int_polynomial_from_json(j.at("coeffs"));
            entries_.insert_or_assign(key(poly, j.at("r").get<int>(), j.at("v").get<int>()),
                                      zeta_combination_from_json(j));
        } catch (const std::exception&) {
            ++skipped_;
        }
    }
}

std::optional<ZetaCombination> DecompositionCache::lookup(const IntPolynomial& poly, int r, int v) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key(poly, r, v));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void DecompositionCache::store(const IntPolynomial& poly, int r, int v, const ZetaCombination& combo) {
    nlohmann::json j = to_json(combo);
    j["coeffs"] = to_json(poly);
    j["r"] = r;
    j["v"] = v;
    std::lock_guard lock(mutex_);
    LockedAppend(path_).write_line(j.dump());
    entries_.insert_or_assign(key(poly, r, v), combo);
}

ZetaCombination DecompositionCache::get_or_compute(const IntPolynomial& poly, int r, int v) {
    if (auto hit = lookup(poly, r, v)) return *hit;
    ZetaCombination combo = decompose(poly, r, v);
    store(poly, r, v, combo);
    return combo;
}

std::size_t DecompositionCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

}  // namespace zetalab
