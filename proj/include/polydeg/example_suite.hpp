#pragma once

#include <string>
#include <vector>

namespace polydeg {

struct ExampleCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// Worked examples with their published values, recomputed from scratch.
std::vector<ExampleCheck> run_example_suite();

}  // namespace polydeg
