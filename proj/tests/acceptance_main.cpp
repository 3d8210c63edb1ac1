#include <cstring>
#include <iostream>

#include "accept.hpp"

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    auto results = pcf::accept::run_all(quick, &std::cerr);
    bool ok = pcf::accept::report(results, std::cout);
    return ok ? 0 : 1;
}
