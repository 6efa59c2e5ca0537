#include "pomdp/rng.hpp"

namespace pomdp {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t derive_stream(uint64_t seed, std::string_view tag, uint64_t index) {
    uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a offset basis
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    uint64_t state = seed ^ h;
    uint64_t mixed = splitmix64(state);
    state = mixed ^ index;
    return splitmix64(state);
}

}  // namespace pomdp
