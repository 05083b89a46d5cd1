// Renders the degree bound tower and the step-by-step chain audit for small (d, r).

#include "nstor/tower.hpp"

#include <iostream>
#include <string>

using namespace nstor;

int main(int argc, char** argv) {
    const int d = argc > 1 ? std::stoi(argv[1]) : 2;
    const int r = argc > 2 ? std::stoi(argv[2]) : 3;
    TowerNumber z = nns_bound(d, r);
    std::cout << "bound " << z.render() << "\n";
    for (int k = 1; z.height() > 0; ++k) {
        z = log2(z);
        std::cout << "log2^" << k << " " << z.render() << "\n";
    }
    const auto a = chain_audit(d, r);
    for (const auto& s : a.steps)
        std::cout << s.step << " [" << s.mode << "] " << (s.pass ? "ok  " : "FAIL") << " " << s.claim << "\n";
    return a.all_pass() ? 0 : 1;
}
