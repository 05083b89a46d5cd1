// Prints the split tree of the recursive section bound next to the exact value.

#include "nstor/mono_gamma.hpp"
#include "nstor/parse.hpp"
#include "nstor/sections.hpp"

#include <iostream>
#include <string>

using namespace nstor;

namespace {

void show(const GammaTrace& node, int depth) {
    std::cout << std::string(static_cast<std::size_t>(depth) * 2, ' ') << GammaTrace::kind_name(node.kind) << " m="
              << node.m.to_string() << " I=" << node.I.to_string() << " #M=" << node.m_count
              << " bound=" << to_string(node.leaf_sum) << "\n";
    for (const auto& c : node.children) show(c, depth + 1);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string text = argc > 1 ? argv[1] : "x0^2*x1\nx0*x1^2\nx2^3";
    const int r = argc > 2 ? std::stoi(argv[2]) : 2;
    const auto I = MonomialIdeal::from_presentation(parse_ideal<Rational>(text, r));
    const auto b = gamma_bound_monomial(I);
    show(b.trace, 0);
    std::cout << "exact " << gamma_exact(I).value << ", bound " << to_string(b.bound) << ", d^r " << to_string(b.d_pow_r)
              << "\n";
}
