#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cycsch {

enum class errc {
    parse = 1,
    cap = 2,
    invalid = 3,
    internal = 4,
};

/// Library-wide exception. `code()` maps onto the C API status codes.
class Error : public std::runtime_error {
public:
    Error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool cond, errc c, const std::string& msg) {
    if (!cond) fail(c, msg);
}

/// Desk-scale resource limits. Every potentially explosive operation takes a
/// Caps and errors loudly instead of thrashing.
struct Caps {
    int ring_size = 2048;                  // max |R| at construction
    int aut_degree = 128;                  // max scheme degree for automorphism search
    std::size_t group_elements = 1000000;  // max explicit PermGroup size
    int unit_group = 256;                  // max |R^x| for subgroup enumeration
    std::size_t ideal_count = 100000;      // max ideals enumerated
    std::size_t stab_elements = 50000;     // max two-point stabilizer size enumerated
};

inline const Caps& default_caps() {
    static const Caps caps;
    return caps;
}

}  // namespace cycsch
