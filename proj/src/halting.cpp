#include "ptm/halting.hpp"

namespace ptm::halting {

StateBound bound_M(std::uint64_t size_g, std::uint64_t size_p, std::uint64_t m) {
    if (size_g < 1 || size_p < 1) throw std::invalid_argument("domain sizes must be at least 1");
    auto overflow = [&] {
        return BoundOverflow("state bound for |G|=" + std::to_string(size_g) + ", |P|=" +
                             std::to_string(size_p) + ", m=" + std::to_string(m) + " exceeds 64 bits");
    };
    std::uint64_t sum = 0;
    if (size_p == 1) {
        if (__builtin_add_overflow(m, std::uint64_t{1}, &sum)) throw overflow();
    } else {
        std::uint64_t power = 1;
        for (std::uint64_t j = 0; j <= m; ++j) {
            if (__builtin_add_overflow(sum, power, &sum)) throw overflow();
            if (j < m && __builtin_mul_overflow(power, size_p, &power)) throw overflow();
        }
    }
    std::uint64_t M = 0;
    if (__builtin_mul_overflow(size_g, sum, &M)) throw overflow();
    return StateBound{m, size_g, size_p, M};
}

std::string HaltingVerdict::line() const {
    switch (kind) {
        case Kind::Halts: return "verdict=halts t=" + std::to_string(t);
        case Kind::Loops: return "verdict=loops mu=" + std::to_string(mu) + " lambda=" + std::to_string(lambda);
        case Kind::Exhausted: return "verdict=exhausted visited=" + std::to_string(visited);
    }
    return "verdict=?";
}

namespace detail {

void require_non_increasing(std::size_t before, std::size_t after, std::size_t t) {
    if (after > before)
        throw PreconditionViolation("particle count grew from " + std::to_string(before) + " to " +
                                    std::to_string(after) + " at step " + std::to_string(t + 1));
}

}  // namespace detail

}  // namespace ptm::halting
