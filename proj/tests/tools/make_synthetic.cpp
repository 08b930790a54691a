// Writes a donor-shaped synthetic CSV: make_synthetic PATH [ROWS] [SEED]

#include <cstdlib>
#include <iostream>

#include "support/synthetic.hpp"

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: make_synthetic PATH [ROWS] [SEED]\n";
        return 2;
    }
    const std::size_t rows = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 300;
    const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;
    donorbench::write_csv(donorbench::testing::rfm_like(rows, seed), argv[1]);
    return 0;
}
