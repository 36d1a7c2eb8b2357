#include "hop/config.hpp"

namespace hop {

Config& config() {
    static Config c;
    return c;
}

} // namespace hop
