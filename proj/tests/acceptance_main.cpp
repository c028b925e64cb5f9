#include "psh/acceptance.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    psh::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--verbose")) opt.verbose = true;
        if (!std::strcmp(argv[i], "--no-stretch")) opt.stretch = false;
    }
    auto res = psh::run_acceptance(std::cout, opt);
    int failed = 0;
    for (auto& r : res) failed += r.pass ? 0 : 1;
    std::cout << (res.size() - static_cast<std::size_t>(failed)) << "/" << res.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
