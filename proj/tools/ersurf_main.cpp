#include <iostream>
#include <string>

#include "ersurf/cli.hpp"

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: ersurf <analyze|classify|elm|walk|table|nagata|mincurves|ram> ... "
                     "[--group m,n | --curve p,a,b] [--seed N] [--json]\n";
        return 2;
    }
    std::string input;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) input += ' ';
        input += argv[i];
    }
    return ersurf::cli::run_text(input, std::cout, std::cerr);
}
