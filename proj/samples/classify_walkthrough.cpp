// Walks a few boundaries on P^1 through classification and complement
// construction, printing the witnesses. Build target: classify_walkthrough.

#include <iostream>

#include "complements/dim1.hpp"

using namespace complements;

namespace {

CurvePair pair_of(std::initializer_list<const char*> values) {
    CurvePair p;
    int i = 0;
    for (const char* v : values) p.B.set("P" + std::to_string(++i), rat(v));
    return p;
}

void walk(const CurvePair& p) {
    std::cout << "B =";
    for (const auto& [label, value] : p.B.entries()) std::cout << " " << value;
    if (p.B.empty()) std::cout << " 0";
    std::cout << "\n";
    if (!has_r_complement(p)) {
        std::cout << "  no R-complement (total " << p.B.sum() << " > 2)\n\n";
        return;
    }
    auto cls = classify(p);
    std::cout << "  type: " << cls.type_tag << " " << cls.type_detail << "\n";
    for (const auto& lvl : cls.approximations) {
        std::cout << "  approximation:";
        for (const Rat& v : lvl.approximation.sorted_values()) std::cout << " " << v;
        std::cout << "\n";
    }
    for (const Int& n : cls.complement_indices) {
        auto res = construct_n_complement(p, n);
        std::cout << "  " << n << "-complement:";
        for (const auto& [label, value] : res.bplus.entries())
            std::cout << " " << label << ":" << value;
        if (res.bplus == p.B) std::cout << "  (itself)";
        std::cout << "\n";
    }
    std::cout << "\n";
}

}  // namespace

int main() {
    walk(pair_of({}));
    walk(pair_of({"1", "1/2", "1/2"}));
    walk(pair_of({"1/2", "1/2", "1/2", "1/2"}));
    walk(pair_of({"7/10", "11/20", "1/2"}));
    walk(pair_of({"2/3", "1/2", "1/2", "1/3"}));
    walk(pair_of({"5/6", "2/3", "1/2"}));
    walk(pair_of({"1", "1", "1/10"}));
    return 0;
}
