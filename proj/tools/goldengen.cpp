// Regenerates the committed golden complexity tables (default budgets,
// standard conditions). Output is bit-identical across platforms.

#include <iostream>

#include "cantorlab/complexity.hpp"

int main(int argc, char** argv) {
    using namespace cantorlab;
    std::string dir = argc > 1 ? argv[1] : CANTORLAB_GOLDEN_DIR;
    const MachineLab& lab = default_lab();
    golden_write(lab.plain, dir + "/plain.tsv");
    golden_write(lab.prefix, dir + "/prefix.tsv");
    std::cout << "wrote " << dir << "/plain.tsv and " << dir << "/prefix.tsv\n";
    return 0;
}
