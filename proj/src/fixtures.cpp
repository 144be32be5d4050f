#include "ldgmsm/fixtures.hpp"

#include <stdexcept>

namespace ldgmsm {

const std::vector<Fixture>& builtin_fixtures() {
    static const std::vector<Fixture> fixtures = {
        {"h2x5_1", 60, 24, 7,
         "N=12\n"
         "x^6;x^7+x^6;1;x^6+x;x^9+x^6\n"
         "x^7+x^5;x^10;x^10+x^7;x^6;x^3\n"},
        {"h2x5_2", 60, 24, 7,
         "N=12\n"
         "x^6;x^10+x^9;x^9;x^11+x^6;x^4+x\n"
         "x^9+x^7;x^8;x^6+x^3;x^6;x^6\n"},
        {"h4x10_1", 60, 24, 7,
         "N=6\n"
         "x^5;0;x^3;x^4;1;0;x^3;x^3;0;x^5\n"
         "0;x^4;x;x;1;x^2;x^4;0;x^2;x\n"
         "x;x;0;0;x;1;1;x;x;0\n"
         "x^2;1;x^2;1;0;x^2;0;x;x^5;x^5\n"},
        {"h4x10_2", 60, 24, 7,
         "N=6\n"
         "1;0;x^2;x^4;x^4;0;x;1;0;x^2\n"
         "0;x^4;1;x^3;x;x^4;x^3;0;x^4;x^3\n"
         "x^2;1;0;0;x^5;x;x^4;x^5;x^3;0\n"
         "1;x;1;x^5;0;x^3;0;x^5;x^2;x^4\n"},
        {"h6x15", 60, 24, 7,
         "N=4\n"
         "1;1;0;0;x;0;x^3;1;0;0;0;x;0;x^3;1\n"
         "x^2;0;0;x^2;0;0;0;x;x^3;0;1;1;x;0;0\n"
         "x^2;x^3;x^3;0;0;x;0;0;0;x^3;x^3;0;0;x^3;0\n"
         "0;x^3;1;1;x^3;0;0;x;x^2;x;0;0;0;0;0\n"
         "0;0;0;0;1;1;1;0;x^2;0;x;0;x;x^3;x^2\n"
         "0;0;x;x^2;0;1;x^3;0;0;1;0;x^3;x^3;0;x^3\n"},
        {"h8x20", 60, 24, 7,
         "N=3\n"
         "x^2;0;0;x^2;0;0;x;0;0;0;0;x;0;0;0;0;x^2;0;x;1\n"
         "x;x;0;1;0;x^2;0;0;x;0;x^2;0;0;0;x^2;0;0;x^2;0;0\n"
         "0;0;0;0;0;x^2;0;0;0;0;0;0;1;x^2;1;x^2;x;0;0;1\n"
         "0;1;1;0;1;0;0;0;0;1;x^2;0;0;1;0;0;0;0;1;1\n"
         "0;x^2;0;0;x;0;x^2;0;1;0;x^2;x;0;0;0;x^2;0;0;0;0\n"
         "0;0;x;x^2;0;1;0;x;x;1;0;1;0;x^2;0;0;0;0;0;0\n"
         "1;0;1;0;x^2;0;0;x;0;x;0;0;x;0;0;0;x;x^2;0;0\n"
         "0;0;0;0;0;0;1;1;0;0;0;0;x;0;x^2;x^2;0;1;x;0\n"},
    };
    return fixtures;
}

const Fixture& builtin_fixture(const std::string& id) {
    for (const auto& f : builtin_fixtures())
        if (f.id == id)
            return f;
    throw std::invalid_argument("unknown fixture id: " + id);
}

} // namespace ldgmsm
